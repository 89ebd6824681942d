// End-to-end acceptance checks for the period/torsion pipeline.  Each
// criterion prints one [PASS]/[FAIL] line; the exit code is the number of
// failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "core/degenerate.hpp"
#include "core/oracle.hpp"
#include "core/periods.hpp"
#include "core/torsion.hpp"
#include "helpers.hpp"

using namespace hyptor;

namespace {

const double pi_v = std::acos(-1.0);
constexpr double kQuadTol = 1e-12;

int failures = 0;

void report(int id, bool pass, const std::string& label,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id,
                label.c_str(), detail.c_str());
    if (!pass) ++failures;
}

void run(int id, const std::string& label,
         const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [pass, detail] = body();
        report(id, pass, label, detail);
    } catch (const std::exception& e) {
        report(id, false, label, std::string("exception: ") + e.what());
    }
}

std::vector<std::vector<double>> increasing_tuples(
    const std::vector<double>& values, int g) {
    std::vector<std::vector<double>> out;
    int n = static_cast<int>(values.size());
    std::vector<int> idx(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<double> b(static_cast<size_t>(g));
        for (int i = 0; i < g; ++i)
            b[static_cast<size_t>(i)] =
                values[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        out.push_back(std::move(b));
        int i = g - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - g + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int m = i + 1; m < g; ++m)
            idx[static_cast<size_t>(m)] = idx[static_cast<size_t>(m - 1)] + 1;
    }
    return out;
}

Matrix random_basis_matrix(std::mt19937_64& rng, int g) {
    while (true) {
        Matrix C(g, g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                C(i, j) = -1.0 + 2.0 * testutil::unit(rng);
        Eigen::JacobiSVD<Matrix> svd(C);
        double cond =
            svd.singularValues()(0) / svd.singularValues()(g - 1);
        if (std::isfinite(cond) && cond < 100.0) return C;
    }
}

// Random configuration with at least one collapsed and (for g >= 2) at least
// one generic pair.
std::vector<double> random_partially_degenerate(std::mt19937_64& rng, int g) {
    while (true) {
        auto a = testutil::random_generic(rng, g, 0.05);
        int collapse = 1 + static_cast<int>(rng() % g);
        if (collapse == g && g > 1) collapse = g - 1;
        for (int j = 0; j < collapse; ++j)
            a[static_cast<size_t>(2 * j + 1)] = a[static_cast<size_t>(2 * j)];
        return a;
    }
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

} // namespace

int main() {
    const std::vector<double> grid{-0.9, -0.5, 0.0, 0.3, 0.5, 0.8};

    run(1, "closed forms reproduced on the degenerate grid", [&] {
        double worst = 0.0;
        int count = 0;
        for (int g = 1; g <= 3; ++g) {
            for (const auto& bvals : increasing_tuples(grid, g)) {
                auto b = DegenerateConfig::validate(bvals);
                auto forms = closed_form(b);
                PeriodData pd = reduced_vector(
                    Configuration::from_degenerate(b),
                    Basis::partial_fraction(b), kQuadTol);
                for (int i = 0; i < g; ++i) {
                    size_t si = static_cast<size_t>(i);
                    worst = std::max(worst,
                                     std::fabs(pd.M(i, i) - forms.M_diag[si]));
                    worst = std::max(worst, std::fabs(pd.v(i) - forms.v[si]));
                    worst = std::max(worst, std::fabs(pd.u(i) - forms.u[si]));
                }
                ++count;
            }
        }
        return std::make_pair(worst < 1e-10,
                              std::to_string(count) +
                                  " tuples, max deviation " + fmt(worst));
    });

    run(2, "exact rational u at b = 0.5 and b = 0", [&] {
        auto u_at = [&](double b) {
            auto bc = DegenerateConfig::validate(std::vector<double>{b});
            return reduced_vector(Configuration::from_degenerate(bc),
                                  kQuadTol)
                .u(0);
        };
        double d1 = std::fabs(u_at(0.5) - 2.0 / 3.0);
        double d2 = std::fabs(u_at(0.0) - 0.5);
        return std::make_pair(d1 < 1e-10 && d2 < 1e-10,
                              "|u-2/3| = " + fmt(d1) + ", |u-1/2| = " +
                                  fmt(d2));
    });

    run(3, "off-diagonal periods vanish in the partial-fraction basis", [&] {
        const std::vector<std::vector<double>> points{
            {-0.5, 0.5},       {-0.25, 0.55},      {-0.8, 0.0},
            {-0.8, 0.0, 0.8},  {-0.6, -0.1, 0.4}};
        double worst = 0.0;
        for (const auto& bvals : points)
            worst = std::max(
                worst, offdiagonal_check(DegenerateConfig::validate(bvals),
                                         kQuadTol));
        return std::make_pair(worst < 1e-10,
                              "5 points, max |M_ij| = " + fmt(worst));
    });

    run(4, "periods are real on random configurations", [&] {
        std::mt19937_64 rng(1001);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            int g = 1 + static_cast<int>(rng() % 3);
            std::vector<double> a;
            switch (rng() % 3) {
            case 0: a = testutil::random_generic(rng, g); break;
            case 1: a = random_partially_degenerate(rng, g); break;
            default: {
                auto b = testutil::random_degenerate(rng, g);
                a.reserve(static_cast<size_t>(2 * g));
                for (double x : b) {
                    a.push_back(x);
                    a.push_back(x);
                }
            }
            }
            auto cfg = Configuration::validate(a);
            PeriodData pd = reduced_vector(cfg, kQuadTol);
            worst = std::max(worst, pd.max_imag);
            double vi = 0.0;
            v_vector_contour(cfg, Basis::standard(g), kQuadTol, &vi);
            worst = std::max(worst, vi);
        }
        return std::make_pair(worst < 1e-9,
                              "100 configurations, max imag " + fmt(worst));
    });

    run(5, "u is independent of the differential basis", [&] {
        std::mt19937_64 rng(2002);
        double worst = 0.0;
        for (int c = 0; c < 10; ++c) {
            int g = 1 + static_cast<int>(rng() % 3);
            auto cfg =
                Configuration::validate(testutil::random_generic(rng, g));
            Vector ref = reduced_vector(cfg, kQuadTol).u;
            for (int trial = 0; trial < 20; ++trial) {
                Basis alt = Basis::from_matrix(random_basis_matrix(rng, g));
                Vector got = reduced_vector(cfg, alt, kQuadTol).u;
                worst = std::max(worst, (ref - got).cwiseAbs().maxCoeff());
            }
        }
        return std::make_pair(worst < 1e-10,
                              "10 configs x 20 bases, max |du| = " +
                                  fmt(worst));
    });

    run(6, "contour, interval, and AGM routes agree", [&] {
        std::mt19937_64 rng(3003);
        double worst_m = 0.0, worst_v = 0.0, worst_agm = 0.0;
        for (int g = 1; g <= 3; ++g) {
            for (int trial = 0; trial < 5; ++trial) {
                auto cfg =
                    Configuration::validate(testutil::random_generic(rng, g));
                Basis basis = Basis::standard(g);
                Matrix M = period_matrix(cfg, basis, kQuadTol);
                for (int i = 0; i < g; ++i)
                    for (int j = 0; j < g; ++j)
                        worst_m = std::max(
                            worst_m,
                            std::fabs(M(i, j) - real_interval_period(
                                                    cfg, i, j, kQuadTol)));
                Vector line = v_vector(cfg, basis, kQuadTol);
                Vector loop = v_vector_contour(cfg, basis, kQuadTol);
                worst_v =
                    std::max(worst_v, (line - loop).cwiseAbs().maxCoeff());
                if (g == 1)
                    worst_agm = std::max(
                        worst_agm, std::fabs(M(0, 0) - agm_period(cfg)));
            }
        }
        bool pass = worst_m < 1e-10 && worst_v < 1e-10 && worst_agm < 1e-10;
        return std::make_pair(pass, "max dM = " + fmt(worst_m) +
                                        ", dv = " + fmt(worst_v) +
                                        ", dAGM = " + fmt(worst_agm));
    });

    run(7, "M stays invertible at double roots", [&] {
        std::mt19937_64 rng(4004);
        double worst_rel = 0.0, worst_cond = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            int g = 1 + static_cast<int>(rng() % 3);
            std::vector<double> a;
            if (trial < 10) {
                auto b = testutil::random_degenerate(rng, g);
                for (double x : b) {
                    a.push_back(x);
                    a.push_back(x);
                }
            } else {
                if (g == 1) g = 2;
                a = random_partially_degenerate(rng, g);
            }
            PeriodData pd = reduced_vector(Configuration::validate(a),
                                           kQuadTol);
            if (!std::isfinite(pd.cond_M))
                return std::make_pair(false,
                                      std::string("non-finite condition "
                                                  "number"));
            worst_cond = std::max(worst_cond, pd.cond_M);
            double rel = (pd.M * pd.u - pd.v).cwiseAbs().maxCoeff() /
                         pd.v.cwiseAbs().maxCoeff();
            worst_rel = std::max(worst_rel, rel);
        }
        return std::make_pair(worst_rel < 1e-10,
                              "20 configs, max residual " + fmt(worst_rel) +
                                  ", max cond " + fmt(worst_cond));
    });

    run(8, "Jacobian of u has full rank with the right pair sums", [&] {
        std::mt19937_64 rng(5005);
        bool ranks_ok = true;
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            int g = 1 + trial % 3;
            auto bvals = testutil::random_degenerate(rng, g);
            auto b = DegenerateConfig::validate(bvals);
            Matrix J = jacobian_u(Configuration::from_degenerate(b), 1e-5,
                                  1e-13);
            if (matrix_rank(J) != g) ranks_ok = false;
            auto forms = closed_form(b);
            for (int i = 0; i < g; ++i)
                worst = std::max(
                    worst,
                    std::fabs(J(i, 2 * i) + J(i, 2 * i + 1) -
                              forms.du_db_diag[static_cast<size_t>(i)]));
        }
        for (int trial = 0; trial < 10; ++trial) {
            int g = 1 + trial % 3;
            auto cfg =
                Configuration::validate(testutil::random_generic(rng, g));
            if (matrix_rank(jacobian_u(cfg, 1e-6, kQuadTol)) != g)
                ranks_ok = false;
        }
        return std::make_pair(ranks_ok && worst < 1e-6,
                              "20 points, max pair-sum deviation " +
                                  fmt(worst));
    });

    run(9, "density scan converges and tightens with q_max", [&] {
        auto r10 = density_scan(1, 9, 10, 1e-10);
        auto r50 = density_scan(1, 9, 50, 1e-10);
        auto r250 = density_scan(1, 9, 250, 1e-10);
        bool converged = r10.converged == 9 && r50.converged == 9 &&
                         r250.converged == 9;
        bool residuals = r10.max_residual < 1e-10 &&
                         r50.max_residual < 1e-10 &&
                         r250.max_residual < 1e-10;
        bool monotone = true;
        for (size_t k = 0; k < 9; ++k) {
            if (r50.points[k].distance > r10.points[k].distance + 1e-12)
                monotone = false;
            if (r250.points[k].distance > r50.points[k].distance + 1e-12)
                monotone = false;
        }
        auto r2 = density_scan(2, 5, 50, 1e-10, 50);
        bool genus2 = r2.success_rate >= 0.95;
        return std::make_pair(
            converged && residuals && monotone && genus2,
            "g=1 converged " + std::to_string(r10.converged) + "/" +
                std::to_string(r50.converged) + "/" +
                std::to_string(r250.converged) + " of 9 at q_max 10/50/250, " +
                "monotone=" + std::string(monotone ? "yes" : "no") +
                ", g=2 rate " + fmt(r2.success_rate));
    });

    run(10, "periods are invariant under contour deformation", [&] {
        std::mt19937_64 rng(6006);
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            int g = 1 + static_cast<int>(rng() % 3);
            auto cfg =
                Configuration::validate(testutil::random_generic(rng, g));
            Basis basis = Basis::standard(g);
            Matrix full = period_matrix(cfg, basis, kQuadTol, 1.0);
            Matrix half = period_matrix(cfg, basis, kQuadTol, 0.5);
            worst = std::max(worst, (full - half).cwiseAbs().maxCoeff());
        }
        return std::make_pair(worst < 1e-10,
                              "10 configs, max |dM| = " + fmt(worst));
    });

    if (failures == 0)
        std::printf("all 10 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
