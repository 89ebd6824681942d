#pragma once

#include <Eigen/Dense>

#include "config.hpp"
#include "contour.hpp"

namespace hyptor {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A basis of g holomorphic differentials p_i(x) dx / sqrt(f), given by the
/// polynomial coefficient rows of the p_i (constant term first, degree <= g-1).
struct Basis {
    int g = 0;
    Matrix coeffs;  // g x g, row i = coefficients of p_i

    /// p_i(x) = x^i.
    static Basis standard(int g);

    /// p_i(x) = prod_{m != i} (x - b_m); diagonalizes the period matrix on
    /// the coincidence locus.
    static Basis partial_fraction(const DegenerateConfig& b);

    static Basis from_matrix(const Matrix& coeffs);

    cplx eval(int i, cplx x) const;

    /// Throws INVALID_ARGUMENT unless the rows are numerically independent
    /// (min singular value > 1e-10 * max).
    void check_independent() const;
};

/// Everything the reduction produces in one place.
struct PeriodData {
    int g = 0;
    std::vector<double> a;
    Matrix M;
    Vector v;
    Vector u;
    double cond_M = 0.0;
    double max_imag = 0.0;
    double tol = 0.0;
};

/// Loop periods M_ij = Re of the integral of p_i dx/sqrt(f) over the
/// counterclockwise rectangle around cut j.  Discarded imaginary parts are
/// tracked; exceeding 1e-9 raises IMAG_TOO_LARGE.
Matrix period_matrix(const Configuration& config, const Basis& basis,
                     double tol, double height_scale = 1.0,
                     double* max_imag_out = nullptr);

/// v_i = 2 * integral over (0,1) of z^(g-1) p_i(1/z) dz / sqrt(F(z)) with the
/// positive real root of F; equals the branch-point-to-infinity period twice.
Vector v_vector(const Configuration& config, const Basis& basis, double tol);

/// Same quantity along the split z-plane contour (verification route).
Vector v_vector_contour(const Configuration& config, const Basis& basis,
                        double tol, double* max_imag_out = nullptr);

/// M, v, and the solution u of M u = v in the given basis (u is basis
/// independent).  Reports the 1-norm condition number of M.
PeriodData reduced_vector(const Configuration& config, const Basis& basis,
                          double tol);

/// Standard-basis reduction.
PeriodData reduced_vector(const Configuration& config, double tol);

/// Realness threshold for discarded imaginary parts.
inline constexpr double kImagTol = 1e-9;

} // namespace hyptor
