#include "branch.hpp"

#include <cmath>
#include <sstream>

namespace hyptor {

namespace {

double dist_point_segment(cplx x, double lo, double hi) {
    double re = x.real(), im = x.imag();
    if (re < lo) return std::abs(x - cplx(lo, 0.0));
    if (re > hi) return std::abs(x - cplx(hi, 0.0));
    return std::fabs(im);
}

} // namespace

BranchedSqrt::BranchedSqrt(Configuration config) : config_(std::move(config)) {}

cplx BranchedSqrt::sqrt_x2_minus_1(cplx x) {
    // i * principal_sqrt(1 - x^2) has Im > 0 exactly off the cuts: the
    // principal square root keeps Re > 0 there, and 1 - x^2 lands on
    // (-inf, 0] precisely when x is real with |x| >= 1.
    cplx w = std::sqrt(cplx(1.0, 0.0) - x * x);
    return cplx(-w.imag(), w.real());
}

cplx BranchedSqrt::sqrt_pair(double lo, double hi, cplx x) {
    if (lo == hi) return x - lo;
    double m = 0.5 * (lo + hi);
    double r = 0.5 * (hi - lo);
    cplx xm = x - m;
    if (std::abs(xm) > r) {
        // Ratio form: manifestly holomorphic outside the disk |x-m| <= r and
        // asymptotic to (x-m) at infinity.
        cplx ratio = r / xm;
        return xm * std::sqrt(cplx(1.0, 0.0) - ratio * ratio);
    }
    // Near zone: split into the two linear factors.  The principal square
    // roots jump together across (-inf, lo], so the product is holomorphic
    // off [lo, hi] and matches the ratio form (positive real at large x).
    return std::sqrt(x - lo) * std::sqrt(x - hi);
}

cplx BranchedSqrt::sqrt_f(cplx x) const {
    double d = distance_to_cuts(x);
    if (d <= kOnCutTol) {
        std::ostringstream os;
        os.precision(17);
        os << "evaluation point (" << x.real() << ", " << x.imag()
           << ") lies within " << kOnCutTol << " of a branch cut";
        fail(errc::on_cut, os.str());
    }
    cplx out = sqrt_x2_minus_1(x);
    for (int j = 0; j < config_.genus(); ++j)
        out *= sqrt_pair(config_.pair_lo(j), config_.pair_hi(j), x);
    return out;
}

cplx BranchedSqrt::sqrt_F(cplx z, Side side) const {
    if (std::abs(z) <= kOnCutTol)
        return side == Side::lower ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
    // z^(g+1) * sqrt_f(1/z) continues both sides: for Im z < 0 the image
    // 1/z lies in the upper x-half-plane (off all cuts), and the asymptotic
    // branch sqrt_f ~ x^(g+1) in the upper half-plane makes the product tend
    // to +1 as z -> 0 from below, -1 from above.
    cplx zp(1.0, 0.0);
    for (int k = 0; k < config_.genus() + 1; ++k) zp *= z;
    return zp * sqrt_f(1.0 / z);
}

cplx BranchedSqrt::F(cplx z) const {
    cplx out = (1.0 - z) * (1.0 + z);
    for (double ai : config_.values()) out *= (1.0 - ai * z);
    return out;
}

cplx BranchedSqrt::f(cplx x) const {
    cplx out = (x - 1.0) * (x + 1.0);
    for (double ai : config_.values()) out *= (x - ai);
    return out;
}

double BranchedSqrt::distance_to_cuts(cplx x) const {
    double re = x.real(), im = x.imag();
    // Ray [1, inf)
    double d = (re >= 1.0) ? std::fabs(im) : std::abs(x - cplx(1.0, 0.0));
    // Ray (-inf, -1]
    double d2 = (re <= -1.0) ? std::fabs(im) : std::abs(x - cplx(-1.0, 0.0));
    d = std::min(d, d2);
    for (int j = 0; j < config_.genus(); ++j)
        d = std::min(d,
                     dist_point_segment(x, config_.pair_lo(j),
                                        config_.pair_hi(j)));
    return d;
}

} // namespace hyptor
