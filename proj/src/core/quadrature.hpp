#pragma once

#include <complex>
#include <functional>

#include "error.hpp"

namespace hyptor {

using cplx = std::complex<double>;

struct QuadResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct RealQuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Adaptive 15-point Gauss-Kronrod quadrature along the straight segment
/// [za, zb].  Bisects until the local error estimate meets the budget;
/// throws NO_CONVERGENCE past bisection depth 30.
QuadResult integrate_segment(const std::function<cplx(const cplx&)>& f,
                             cplx za, cplx zb, double budget);

/// Tanh-sinh (double-exponential) quadrature on [lo, hi].  Designed for
/// integrands with inverse-square-root endpoint singularities.  The integrand
/// receives the abscissa together with its exact distances to both endpoints
/// (d_lo = x - lo, d_hi = hi - x computed without cancellation); singular
/// factors should be evaluated from the distances.
RealQuadResult tanh_sinh(
    const std::function<double(double x, double d_lo, double d_hi)>& f,
    double lo, double hi, double tol);

/// Convenience overload for integrands that do not need endpoint distances.
RealQuadResult tanh_sinh(const std::function<double(double)>& f, double lo,
                         double hi, double tol);

} // namespace hyptor
