#include "periods.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "parallel.hpp"

namespace hyptor {

Basis Basis::standard(int g) {
    if (g < 1) fail(errc::invalid_argument, "genus must be >= 1");
    Basis b;
    b.g = g;
    b.coeffs = Matrix::Identity(g, g);
    return b;
}

Basis Basis::partial_fraction(const DegenerateConfig& bcfg) {
    int g = bcfg.genus();
    Basis b;
    b.g = g;
    b.coeffs = Matrix::Zero(g, g);
    for (int i = 0; i < g; ++i) {
        // Expand prod_{m != i} (x - b_m).
        std::vector<double> poly{1.0};
        for (int m = 0; m < g; ++m) {
            if (m == i) continue;
            std::vector<double> next(poly.size() + 1, 0.0);
            for (size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] += poly[k];
                next[k] -= bcfg[m] * poly[k];
            }
            poly = std::move(next);
        }
        for (size_t k = 0; k < poly.size(); ++k)
            b.coeffs(i, static_cast<int>(k)) = poly[k];
    }
    return b;
}

Basis Basis::from_matrix(const Matrix& coeffs) {
    if (coeffs.rows() != coeffs.cols() || coeffs.rows() < 1)
        fail(errc::invalid_argument, "basis coefficient matrix must be square");
    Basis b;
    b.g = static_cast<int>(coeffs.rows());
    b.coeffs = coeffs;
    b.check_independent();
    return b;
}

cplx Basis::eval(int i, cplx x) const {
    cplx acc(0.0, 0.0);
    for (int k = g - 1; k >= 0; --k) acc = acc * x + coeffs(i, k);
    return acc;
}

void Basis::check_independent() const {
    Eigen::JacobiSVD<Matrix> svd(coeffs);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0.0 || sv(g - 1) <= 1e-10 * sv(0))
        fail(errc::invalid_argument,
             "basis polynomials are not numerically independent");
}

Matrix period_matrix(const Configuration& config, const Basis& basis,
                     double tol, double height_scale, double* max_imag_out) {
    if (basis.g != config.genus())
        fail(errc::invalid_argument, "basis genus does not match configuration");
    const int g = config.genus();
    BranchedSqrt br(config);

    std::vector<Path> loops;
    loops.reserve(static_cast<size_t>(g));
    for (int j = 0; j < g; ++j)
        loops.push_back(rectangle_loop(config, j, height_scale));

    Matrix M(g, g);
    std::vector<double> imags(static_cast<size_t>(g) * g, 0.0);
    parallel_for(g * g, [&](int idx) {
        int i = idx / g, j = idx % g;
        auto integrand = [&](const cplx& x) {
            return basis.eval(i, x) / br.sqrt_f(x);
        };
        QuadResult r = integrate(loops[static_cast<size_t>(j)], integrand, tol);
        M(i, j) = r.value.real();
        imags[static_cast<size_t>(idx)] = std::fabs(r.value.imag());
    });

    double max_imag = 0.0;
    for (double v : imags) max_imag = std::max(max_imag, v);
    if (max_imag_out) *max_imag_out = max_imag;
    if (max_imag >= kImagTol) {
        std::ostringstream os;
        os << "discarded imaginary part " << max_imag
           << " exceeds realness threshold " << kImagTol;
        fail(errc::imag_too_large, os.str());
    }
    return M;
}

Vector v_vector(const Configuration& config, const Basis& basis, double tol) {
    if (basis.g != config.genus())
        fail(errc::invalid_argument, "basis genus does not match configuration");
    const int g = config.genus();
    const auto& a = config.values();

    Vector v(g);
    for (int i = 0; i < g; ++i) {
        // z^(g-1) p_i(1/z) = sum_k c_ik z^(g-1-k): reversed coefficients.
        std::vector<double> rev(static_cast<size_t>(g));
        for (int k = 0; k < g; ++k)
            rev[static_cast<size_t>(g - 1 - k)] = basis.coeffs(i, k);
        auto f = [&](double z, double /*d_lo*/, double d_hi) {
            double num = 0.0;
            for (int k = g - 1; k >= 0; --k)
                num = num * z + rev[static_cast<size_t>(k)];
            // F(z) = (1-z)(1+z) prod(1 - a_m z) > 0 on (0,1); 1-z = d_hi.
            double F = d_hi * (1.0 + z);
            for (double am : a) F *= (1.0 - am * z);
            return num / std::sqrt(F);
        };
        v(i) = 2.0 * tanh_sinh(f, 0.0, 1.0, tol).value;
    }
    return v;
}

Vector v_vector_contour(const Configuration& config, const Basis& basis,
                        double tol, double* max_imag_out) {
    if (basis.g != config.genus())
        fail(errc::invalid_argument, "basis genus does not match configuration");
    const int g = config.genus();
    BranchedSqrt br(config);
    VPath vp = v_path(config);

    Vector v(g);
    double max_imag = 0.0;
    for (int i = 0; i < g; ++i) {
        std::vector<double> rev(static_cast<size_t>(g));
        for (int k = 0; k < g; ++k)
            rev[static_cast<size_t>(g - 1 - k)] = basis.coeffs(i, k);
        auto num = [&](const cplx& z) {
            cplx acc(0.0, 0.0);
            for (int k = g - 1; k >= 0; --k)
                acc = acc * z + rev[static_cast<size_t>(k)];
            return acc;
        };
        auto f_lower = [&](const cplx& z) {
            return num(z) / br.sqrt_F(z, Side::lower);
        };
        auto f_upper = [&](const cplx& z) {
            return num(z) / br.sqrt_F(z, Side::upper);
        };
        QuadResult lo = integrate(vp.lower, f_lower, 0.5 * tol);
        QuadResult hi = integrate(vp.upper, f_upper, 0.5 * tol);
        cplx total = lo.value + hi.value;
        v(i) = total.real();
        max_imag = std::max(max_imag, std::fabs(total.imag()));
    }
    if (max_imag_out) *max_imag_out = max_imag;
    if (max_imag >= kImagTol) {
        std::ostringstream os;
        os << "discarded imaginary part " << max_imag
           << " exceeds realness threshold " << kImagTol;
        fail(errc::imag_too_large, os.str());
    }
    return v;
}

PeriodData reduced_vector(const Configuration& config, const Basis& basis,
                          double tol) {
    PeriodData pd;
    pd.g = config.genus();
    pd.a = config.values();
    pd.tol = tol;

    double mi_M = 0.0;
    pd.M = period_matrix(config, basis, tol, 1.0, &mi_M);
    pd.v = v_vector(config, basis, tol);
    pd.max_imag = mi_M;

    Eigen::PartialPivLU<Matrix> lu(pd.M);
    Matrix inv = lu.inverse();
    double norm1 = pd.M.cwiseAbs().colwise().sum().maxCoeff();
    double inv_norm1 = inv.cwiseAbs().colwise().sum().maxCoeff();
    pd.cond_M = norm1 * inv_norm1;
    pd.u = lu.solve(pd.v);

    double resid = (pd.M * pd.u - pd.v).cwiseAbs().maxCoeff();
    double vscale = std::max(pd.v.cwiseAbs().maxCoeff(), 1e-300);
    if (!std::isfinite(pd.cond_M) || !pd.u.allFinite() ||
        resid > 1e-8 * vscale) {
        std::ostringstream os;
        os << "period matrix solve failed (cond_1 = " << pd.cond_M
           << ", residual = " << resid << ")";
        fail(errc::singular_m, os.str());
    }
    return pd;
}

PeriodData reduced_vector(const Configuration& config, double tol) {
    return reduced_vector(config, Basis::standard(config.genus()), tol);
}

} // namespace hyptor
