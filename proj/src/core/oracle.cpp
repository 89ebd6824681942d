#include "oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "quadrature.hpp"

namespace hyptor {

double real_interval_period(const Configuration& config, int i, int j,
                            double tol) {
    const int g = config.genus();
    if (i < 0 || i >= g || j < 0 || j >= g)
        fail(errc::invalid_argument, "period index out of range");
    if (config.classification() != Classification::generic)
        fail(errc::not_generic,
             "real-interval periods need distinct pair members");

    const double lo = config.pair_lo(j), hi = config.pair_hi(j);
    // On (lo, hi): f > 0, and the boundary value of sqrt(f) from below the
    // cut is real with sign sigma = (-1)^(number of pairs to the right):
    // the enclosed pair and the outer factor contribute i * (-i) = 1, each
    // pair to the right is negative on its left side.
    const double sigma = ((g - 1 - j) % 2 == 0) ? 1.0 : -1.0;

    auto f = [&](double x, double d_lo, double d_hi) {
        double num = 1.0;
        for (int k = 0; k < i; ++k) num *= x;
        double den = (1.0 - x) * (1.0 + x) * d_lo * d_hi;
        for (int m = 0; m < g; ++m) {
            if (m == j) continue;
            den *= (x - config.pair_lo(m)) * (x - config.pair_hi(m));
        }
        return num / std::sqrt(den);
    };
    return 2.0 * sigma * tanh_sinh(f, lo, hi, tol).value;
}

double elliptic_K_from_kprime(double kprime) {
    if (!(kprime > 0.0 && kprime <= 1.0))
        fail(errc::invalid_argument, "k' must be in (0, 1]");
    double a = 1.0, b = kprime;
    for (int it = 0; it < 60 && std::fabs(a - b) > 1e-17 * a; ++it) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::numbers::pi / (2.0 * a);
}

double elliptic_K(double k) {
    if (!(k >= 0.0 && k < 1.0))
        fail(errc::invalid_argument, "modulus must be in [0, 1)");
    return elliptic_K_from_kprime(std::sqrt((1.0 - k) * (1.0 + k)));
}

double agm_period(const Configuration& config) {
    if (config.genus() != 1)
        fail(errc::not_genus_1, "AGM reduction applies to genus 1 only");
    if (config.classification() != Classification::generic)
        fail(errc::not_generic, "AGM reduction needs distinct pair members");
    // Branch points r1 < r2 < r3 < r4 = -1 < a1 < a2 < 1.  The cut period is
    //   2 * g * K(k),  g = 2 / sqrt((r3-r1)(r4-r2)),
    //   k'^2 = ((r2-r1)(r4-r3)) / ((r3-r1)(r4-r2)).
    const double a1 = config.pair_lo(0), a2 = config.pair_hi(0);
    const double d31 = a2 + 1.0, d42 = 1.0 - a1;
    const double d21 = a1 + 1.0, d43 = 1.0 - a2;
    double kprime = std::sqrt((d21 * d43) / (d31 * d42));
    double gfac = 2.0 / std::sqrt(d31 * d42);
    return 2.0 * gfac * elliptic_K_from_kprime(kprime);
}

} // namespace hyptor
