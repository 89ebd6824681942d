#pragma once

#include "config.hpp"
#include "quadrature.hpp"

namespace hyptor {

/// Which side of the double cover a z-plane evaluation belongs to.  The two
/// sides meet at the crossing point of the v-path; they differ only in the
/// limit at z = 0, where LOWER tends to +1 and UPPER to -1.
enum class Side { lower, upper };

/// Branch assignments for sqrt(f) on the cut plane, f(x) = (x^2-1) *
/// prod_i (x - a_i).  Cuts: (-inf,-1], [1,inf), and one segment per pair
/// (a point puncture when the pair coincides).
///
/// Factor conventions:
///   * sqrt(x^2-1) has positive imaginary part away from its cuts.
///   * Each pair factor sqrt((x-lo)(x-hi)) is positive real for real x to the
///     right of its cut and asymptotic to x at infinity (hence negative real
///     to the left: a holomorphic branch cannot be positive on both sides).
class BranchedSqrt {
  public:
    explicit BranchedSqrt(Configuration config);

    const Configuration& config() const { return config_; }

    /// Branch of sqrt(x^2-1) with Im >= 0, holomorphic off the two rays.
    static cplx sqrt_x2_minus_1(cplx x);

    /// Branch of sqrt((x-lo)(x-hi)), cut [lo, hi], positive for real x > hi.
    /// For a coincident pair this is x - lo itself.
    static cplx sqrt_pair(double lo, double hi, cplx x);

    /// Product branch over all factors.  Throws ON_CUT within 1e-15 of a cut.
    cplx sqrt_f(cplx x) const;

    /// Branch of sqrt(F) in the z = 1/x chart, F(z) = (1-z^2) prod(1-a_i z),
    /// used on the v-path.  Anchored so the value tends to +1 as z -> 0 from
    /// the lower half-plane and -1 from the upper half-plane; away from z = 0
    /// both sides are restrictions of the same holomorphic branch
    /// z^(g+1) * sqrt_f(1/z).
    cplx sqrt_F(cplx z, Side side) const;

    /// F(z) evaluated directly (no branch choice); for identity checks.
    cplx F(cplx z) const;

    /// f(x) evaluated directly.
    cplx f(cplx x) const;

    /// Distance from x to the nearest branch cut in the x-plane.
    double distance_to_cuts(cplx x) const;

    static constexpr double kOnCutTol = 1e-15;

  private:
    Configuration config_;
};

} // namespace hyptor
