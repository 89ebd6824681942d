#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/oracle.hpp"
#include "core/periods.hpp"
#include "helpers.hpp"

using namespace hyptor;
using testutil::code_of;

namespace {
const double pi_v = std::acos(-1.0);
}

TEST_CASE("complete elliptic integral helpers") {
    CHECK(elliptic_K(0.0) == doctest::Approx(pi_v / 2).epsilon(1e-15));
    CHECK(elliptic_K_from_kprime(1.0) ==
          doctest::Approx(pi_v / 2).epsilon(1e-15));
    // series check at small modulus: K = (pi/2) sum ((2n-1)!!/(2n)!!)^2 k^2n
    double k = 0.1;
    double series =
        pi_v / 2 * (1 + k * k / 4 + 9 * std::pow(k, 4) / 64 +
                    25 * std::pow(k, 6) / 256 +
                    1225 * std::pow(k, 8) / 16384);
    CHECK(std::abs(elliptic_K(k) - series) < 1e-10);
    CHECK(code_of([] { elliptic_K(1.0); }) == errc::invalid_argument);
    CHECK(code_of([] { elliptic_K(-0.1); }) == errc::invalid_argument);
}

TEST_CASE("interval oracle matches the contour engine") {
    auto c = Configuration::validate(std::vector<double>{-0.5, 0.5});
    Matrix M = period_matrix(c, Basis::standard(1), 1e-12);
    CHECK(std::abs(real_interval_period(c, 0, 0, 1e-12) - M(0, 0)) < 1e-10);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 4; ++trial) {
        auto c2 = Configuration::validate(testutil::random_generic(rng, 2));
        Matrix M2 = period_matrix(c2, Basis::standard(2), 1e-12);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(std::abs(real_interval_period(c2, i, j, 1e-12) -
                               M2(i, j)) < 1e-10);
    }
}

TEST_CASE("interval oracle tends to the closed form as a pair collapses") {
    double b = 0.3, delta = 1e-3;
    auto c = Configuration::validate(std::vector<double>{b - delta, b + delta});
    double period = real_interval_period(c, 0, 0, 1e-12);
    CHECK(std::abs(period - 2 * pi_v / std::sqrt(1 - b * b)) < 1e-4);
}

TEST_CASE("interval oracle rejects non-generic input and bad indices") {
    auto degenerate = Configuration::validate(std::vector<double>{0.3, 0.3});
    CHECK(code_of([&] { real_interval_period(degenerate, 0, 0, 1e-12); }) ==
          errc::not_generic);
    auto c = Configuration::validate(std::vector<double>{-0.5, 0.5});
    CHECK(code_of([&] { real_interval_period(c, 0, 1, 1e-12); }) ==
          errc::invalid_argument);
    CHECK(code_of([&] { real_interval_period(c, -1, 0, 1e-12); }) ==
          errc::invalid_argument);
}

TEST_CASE("AGM route agrees with the interval oracle at genus 1") {
    for (auto a : {std::vector<double>{-0.5, 0.5},
                   std::vector<double>{-0.9, 0.9},
                   std::vector<double>{-0.2, 0.7}}) {
        auto c = Configuration::validate(a);
        CHECK(std::abs(agm_period(c) - real_interval_period(c, 0, 0, 1e-13)) <
              1e-12 * agm_period(c));
    }
    CHECK(code_of([] {
              agm_period(Configuration::validate(
                  std::vector<double>{-0.6, -0.4, 0.2, 0.5}));
          }) == errc::not_genus_1);
    CHECK(code_of([] {
              agm_period(Configuration::validate(
                  std::vector<double>{0.3, 0.3}));
          }) == errc::not_generic);
}

TEST_CASE("three independent routes agree on random genus-1 curves") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = Configuration::validate(testutil::random_generic(rng, 1));
        double contour = period_matrix(c, Basis::standard(1), 1e-12)(0, 0);
        double interval = real_interval_period(c, 0, 0, 1e-12);
        double agm = agm_period(c);
        CHECK(std::abs(contour - interval) < 1e-10);
        CHECK(std::abs(contour - agm) < 1e-10);
    }
}
