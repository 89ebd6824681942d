#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "periods.hpp"
#include "rational.hpp"

namespace hyptor {

/// Jacobian of a -> u(a) as a g x 2g matrix of central finite differences.
/// The step in coordinate k is min(h, margin/4) for the margins of the pair
/// containing k, so perturbed tuples always remain valid (a perturbation that
/// crosses the partner inside its own pair merely swaps labels, which u does
/// not see).  tol is the quadrature tolerance of the underlying u
/// evaluations.
Matrix jacobian_u(const Configuration& a, double h = 1e-6, double tol = 1e-12);

/// Number of singular values exceeding rel_threshold times the largest one.
int matrix_rank(const Matrix& J, double rel_threshold = 1e-6);

std::vector<double> singular_values(const Matrix& J);

struct TorsionCertificate {
    std::vector<double> a0;
    std::vector<double> a_star;
    std::vector<Rational> target;
    std::vector<double> u_star;
    double residual = 0.0; // max_i |u(a_star)_i - target_i|
    double distance = 0.0; // max_k |a_star_k - a0_k|
    int iterations = 0;
};

/// Gauss-Newton search for a nearby tuple whose u is rational.  The target is
/// fixed once from u(a0) (componentwise nearest fractions with denominator
/// <= q_max); each step is the minimal-norm solution of J delta = -r and is
/// halved while the candidate leaves the valid domain or fails to decrease
/// the max-norm residual.
TorsionCertificate find_torsion_near(const Configuration& a0, long long q_max,
                                     double tol = 1e-10, int max_iter = 50);

struct ScanPoint {
    std::vector<double> b;
    bool converged = false;
    std::string status; // "CONVERGED" or the error name
    double residual = 0.0;
    double distance = 0.0;
    int iterations = 0;
    std::vector<Rational> target;
};

struct DensityReport {
    int genus = 0;
    int grid_per_axis = 0;
    long long q_max = 0;
    double tol = 0.0;
    int total = 0;
    int converged = 0;
    double success_rate = 0.0;
    double max_distance = 0.0; // over converged points
    double max_residual = 0.0; // over converged points
    std::vector<ScanPoint> points;
};

/// Runs find_torsion_near from every point of a coarse lattice on the
/// fully degenerate locus: coordinate values -1 + 2(k+1)/(N+1) for
/// k = 0..N-1 with N = grid_per_axis, taken over all strictly increasing
/// g-tuples.  Per-point failures are recorded, not fatal.
DensityReport density_scan(int g, int grid_per_axis, long long q_max,
                           double tol = 1e-10, int max_iter = 50);

} // namespace hyptor
