#include "torsion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/SVD>

#include "parallel.hpp"

namespace hyptor {

namespace {

std::vector<double> to_std(const Vector& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

double max_abs_diff(const Vector& u, const Vector& t) {
    return (u - t).cwiseAbs().maxCoeff();
}

Vector target_values(const std::vector<Rational>& target) {
    Vector t(static_cast<Eigen::Index>(target.size()));
    for (size_t i = 0; i < target.size(); ++i)
        t(static_cast<Eigen::Index>(i)) = target[i].value();
    return t;
}

} // namespace

Matrix jacobian_u(const Configuration& a, double h, double tol) {
    if (!(h > 0.0) || !std::isfinite(h))
        fail(errc::invalid_argument, "jacobian step h must be positive");
    const int g = a.genus();
    const auto& vals = a.values();
    const auto margins = a.margins();

    Matrix J(g, 2 * g);
    for (int k = 0; k < 2 * g; ++k) {
        int j = k / 2;
        double hk = std::min({h, 0.25 * margins[static_cast<size_t>(j)],
                              0.25 * margins[static_cast<size_t>(j) + 1]});
        double ak = vals[static_cast<size_t>(k)];
        if (!(hk > 0.0) || ak + hk == ak || ak - hk == ak) {
            std::ostringstream os;
            os << "margins around coordinate " << k
               << " leave no representable finite-difference step (h_k = "
               << hk << ")";
            fail(errc::margin_too_small, os.str());
        }
        std::vector<double> plus = vals, minus = vals;
        plus[static_cast<size_t>(k)] = ak + hk;
        minus[static_cast<size_t>(k)] = ak - hk;
        Vector up = reduced_vector(Configuration::validate(plus), tol).u;
        Vector um = reduced_vector(Configuration::validate(minus), tol).u;
        J.col(k) = (up - um) / (2.0 * hk);
    }
    return J;
}

int matrix_rank(const Matrix& J, double rel_threshold) {
    if (!J.allFinite())
        fail(errc::invalid_argument, "rank of a non-finite matrix");
    Eigen::JacobiSVD<Matrix> svd(J);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double cutoff = rel_threshold * sv(0);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

std::vector<double> singular_values(const Matrix& J) {
    Eigen::JacobiSVD<Matrix> svd(J);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

TorsionCertificate find_torsion_near(const Configuration& a0, long long q_max,
                                     double tol, int max_iter) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        fail(errc::invalid_argument, "tolerance must be positive");
    if (max_iter < 1)
        fail(errc::invalid_argument, "max_iter must be >= 1");
    const int g = a0.genus();
    const double quad_tol = std::clamp(tol * 1e-2, 1e-14, 1e-12);

    Vector u = reduced_vector(a0, quad_tol).u;
    std::vector<Rational> target = nearest_rationals(to_std(u), q_max);
    Vector t = target_values(target);

    TorsionCertificate cert;
    cert.a0 = a0.values();
    cert.target = target;

    double res = max_abs_diff(u, t);
    if (res < tol) {
        cert.a_star = a0.values();
        cert.u_star = to_std(u);
        cert.residual = res;
        cert.distance = 0.0;
        cert.iterations = 0;
        return cert;
    }

    Matrix J = jacobian_u(a0, 1e-6, quad_tol);
    int r0 = matrix_rank(J, 1e-6);
    if (r0 < g) {
        std::ostringstream os;
        os << "Jacobian of u has rank " << r0 << " < " << g
           << " at the start point";
        fail(errc::rank_deficient, os.str());
    }

    std::vector<double> a = a0.values();
    int iterations = 0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        if (iter > 1) J = jacobian_u(Configuration::validate(a), 1e-6, quad_tol);
        Eigen::JacobiSVD<Matrix> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(1e-6);
        Vector delta = svd.solve(-(u - t)); // minimal-norm step

        bool accepted = false;
        bool any_valid = false;
        double alpha = 1.0;
        for (int halving = 0; halving < 60; ++halving, alpha *= 0.5) {
            std::vector<double> cand = a;
            for (int k = 0; k < 2 * g; ++k)
                cand[static_cast<size_t>(k)] += alpha * delta(k);
            Vector u_c;
            try {
                Configuration cfg_c = Configuration::validate(cand);
                u_c = reduced_vector(cfg_c, quad_tol).u;
            } catch (const error&) {
                continue;
            }
            any_valid = true;
            double res_c = max_abs_diff(u_c, t);
            if (res_c < res) {
                a = Configuration::validate(cand).values();
                u = u_c;
                res = res_c;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            if (!any_valid)
                fail(errc::left_domain,
                     "damping cannot keep the iterate inside the valid domain");
            std::ostringstream os;
            os << "residual stalled at " << res << " after " << iterations
               << " accepted steps";
            fail(errc::no_convergence, os.str());
        }
        iterations = iter;
        if (res < tol) break;
    }
    if (res >= tol) {
        std::ostringstream os;
        os << "residual " << res << " still above tolerance " << tol
           << " after " << max_iter << " iterations";
        fail(errc::no_convergence, os.str());
    }

    cert.a_star = a;
    cert.u_star = to_std(u);
    cert.residual = res;
    double dist = 0.0;
    for (int k = 0; k < 2 * g; ++k)
        dist = std::max(dist, std::fabs(a[static_cast<size_t>(k)] -
                                        cert.a0[static_cast<size_t>(k)]));
    cert.distance = dist;
    cert.iterations = iterations;
    return cert;
}

DensityReport density_scan(int g, int grid_per_axis, long long q_max,
                           double tol, int max_iter) {
    if (g < 1) fail(errc::invalid_argument, "genus must be >= 1");
    if (grid_per_axis < g)
        fail(errc::invalid_argument,
             "grid_per_axis must be >= genus to admit a strictly increasing "
             "tuple");

    const int N = grid_per_axis;
    std::vector<double> values(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k)
        values[static_cast<size_t>(k)] = -1.0 + 2.0 * (k + 1) / (N + 1);

    // All strictly increasing g-tuples of grid values.
    std::vector<std::vector<double>> tuples;
    std::vector<int> idx(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<double> b(static_cast<size_t>(g));
        for (int i = 0; i < g; ++i)
            b[static_cast<size_t>(i)] = values[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        tuples.push_back(std::move(b));
        if (tuples.size() > 10000)
            fail(errc::invalid_argument, "grid exceeds 10^4 points");
        int i = g - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == N - g + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int m = i + 1; m < g; ++m)
            idx[static_cast<size_t>(m)] = idx[static_cast<size_t>(m - 1)] + 1;
    }

    DensityReport rep;
    rep.genus = g;
    rep.grid_per_axis = grid_per_axis;
    rep.q_max = q_max;
    rep.tol = tol;
    rep.total = static_cast<int>(tuples.size());
    rep.points.resize(tuples.size());

    parallel_for(rep.total, [&](int i) {
        ScanPoint& pt = rep.points[static_cast<size_t>(i)];
        pt.b = tuples[static_cast<size_t>(i)];
        try {
            DegenerateConfig bc = DegenerateConfig::validate(pt.b);
            Configuration cfg = Configuration::from_degenerate(bc);
            TorsionCertificate cert = find_torsion_near(cfg, q_max, tol, max_iter);
            pt.converged = true;
            pt.status = "CONVERGED";
            pt.residual = cert.residual;
            pt.distance = cert.distance;
            pt.iterations = cert.iterations;
            pt.target = cert.target;
        } catch (const error& e) {
            pt.converged = false;
            pt.status = errc_name(e.code());
            pt.residual = std::numeric_limits<double>::quiet_NaN();
            pt.distance = std::numeric_limits<double>::quiet_NaN();
            pt.iterations = 0;
        }
    });

    for (const ScanPoint& pt : rep.points) {
        if (!pt.converged) continue;
        ++rep.converged;
        rep.max_distance = std::max(rep.max_distance, pt.distance);
        rep.max_residual = std::max(rep.max_residual, pt.residual);
    }
    rep.success_rate =
        rep.total > 0 ? static_cast<double>(rep.converged) / rep.total : 0.0;
    return rep;
}

} // namespace hyptor
