#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/degenerate.hpp"
#include "helpers.hpp"

using namespace hyptor;

namespace {

const double pi_v = std::acos(-1.0);

DegenerateClosedForm cf(std::vector<double> b) {
    return closed_form(DegenerateConfig::validate(b));
}

} // namespace

TEST_CASE("closed forms at pinned points") {
    auto c0 = cf({0.0});
    CHECK(c0.M_diag[0] == doctest::Approx(2 * pi_v).epsilon(1e-15));
    CHECK(c0.v[0] == doctest::Approx(pi_v).epsilon(1e-15));
    CHECK(c0.u[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c0.du_db_diag[0] == doctest::Approx(1.0 / pi_v).epsilon(1e-15));

    auto c5 = cf({0.5});
    CHECK(c5.u[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(c5.M_diag[0] ==
          doctest::Approx(2 * pi_v / std::sqrt(0.75)).epsilon(1e-15));

    auto c2 = cf({-0.5, 0.5});
    CHECK(c2.u[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(c2.u[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    auto c3 = cf({0.3});
    CHECK(c3.M_diag[0] ==
          doctest::Approx(2 * pi_v / std::sqrt(0.91)).epsilon(1e-15));
}

TEST_CASE("closed-form u lies in (0,1) and increases with b") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        double b = -0.999 + 1.998 * testutil::unit(rng);
        auto c = cf({b});
        CHECK(c.u[0] > 0.0);
        CHECK(c.u[0] < 1.0);
        auto c_up = cf({std::min(b + 1e-3, 0.9995)});
        CHECK(c_up.u[0] >= c.u[0]);
    }
}

TEST_CASE("reflection symmetry of the closed forms") {
    std::vector<double> b{-0.7, -0.1, 0.4};
    auto fwd = cf(b);
    std::vector<double> rb{-0.4, 0.1, 0.7};
    auto rev = cf(rb);
    for (int i = 0; i < 3; ++i) {
        CHECK(rev.u[static_cast<size_t>(i)] ==
              doctest::Approx(1.0 - fwd.u[static_cast<size_t>(2 - i)])
                  .epsilon(1e-14));
        CHECK(rev.M_diag[static_cast<size_t>(i)] ==
              doctest::Approx(fwd.M_diag[static_cast<size_t>(2 - i)])
                  .epsilon(1e-14));
    }
}

TEST_CASE("du/db matches a finite difference of the closed-form u") {
    for (double b : {-0.9, -0.5, 0.0, 0.3, 0.5, 0.8}) {
        double h = 1e-5;
        double fd = (cf({b + h}).u[0] - cf({b - h}).u[0]) / (2 * h);
        CHECK(std::abs(fd - cf({b}).du_db_diag[0]) < 1e-8);
    }
}

TEST_CASE("contour engine produces a diagonal matrix at degenerate points") {
    CHECK(offdiagonal_check(DegenerateConfig::validate(
                                std::vector<double>{-0.5, 0.5}),
                            1e-12) < 1e-10);
    CHECK(offdiagonal_check(DegenerateConfig::validate(
                                std::vector<double>{-0.8, 0.0, 0.8}),
                            1e-12) < 1e-10);
    CHECK(offdiagonal_check(DegenerateConfig::validate(
                                std::vector<double>{0.25}),
                            1e-12) == 0.0);
}

TEST_CASE("residue route reproduces the diagonal periods") {
    auto b0 = DegenerateConfig::validate(std::vector<double>{0.0});
    CHECK(std::abs(residue_period(b0, 0) - 2 * pi_v) < 1e-13);

    auto b5 = DegenerateConfig::validate(std::vector<double>{0.5});
    CHECK(std::abs(residue_period(b5, 0) - 2 * pi_v / std::sqrt(0.75)) <
          1e-13);

    auto b2 = DegenerateConfig::validate(std::vector<double>{-0.25, 0.55});
    auto forms = closed_form(b2);
    for (int i = 0; i < 2; ++i)
        CHECK(std::abs(residue_period(b2, i) -
                       forms.M_diag[static_cast<size_t>(i)]) < 1e-12);
}

TEST_CASE("rational substitution reproduces v") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        int g = 1 + static_cast<int>(rng() % 3);
        auto b = DegenerateConfig::validate(
            testutil::random_degenerate(rng, g));
        auto forms = closed_form(b);
        for (int i = 0; i < g; ++i)
            CHECK(std::abs(v_via_t_substitution(b, i, 1e-13) -
                           forms.v[static_cast<size_t>(i)]) < 1e-11);
    }
}
