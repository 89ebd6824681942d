#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyptor {

namespace {

// 15-point Kronrod abscissae (positive half) with the embedded 7-point Gauss
// rule.  xgk[1], xgk[3], ... are the Gauss nodes.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

constexpr int kMaxDepth = 30;
constexpr int kMaxLevel = 12;
constexpr double kTMax = 6.1;

struct Panel {
    cplx value;
    double error;
    double resabs;
};

Panel gk15(const std::function<cplx(const cplx&)>& f, cplx za, cplx zb) {
    const cplx mid = 0.5 * (za + zb);
    const cplx half = 0.5 * (zb - za);
    const double hl = std::abs(half);

    cplx fc = f(mid);
    cplx resg = fc * wg[3];
    cplx resk = fc * wgk[7];
    double resabs = std::abs(fc) * wgk[7];
    for (int i = 0; i < 7; ++i) {
        cplx f1 = f(mid - half * xgk[i]);
        cplx f2 = f(mid + half * xgk[i]);
        resk += wgk[i] * (f1 + f2);
        resabs += wgk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) resg += wg[i / 2] * (f1 + f2);
    }
    Panel out;
    out.value = resk * half;
    out.error = std::abs(resk - resg) * hl;
    out.resabs = resabs * hl;
    return out;
}

void adaptive(const std::function<cplx(const cplx&)>& f, cplx za, cplx zb,
              double budget, int depth, double root_resabs, QuadResult& acc) {
    Panel p = gk15(f, za, zb);
    acc.evaluations += 15;
    if (!std::isfinite(p.value.real()) || !std::isfinite(p.value.imag()))
        fail(errc::no_convergence, "integrand returned a non-finite value");
    if (depth == 0) root_resabs = p.resabs;
    // Below this scale the |K-G| estimate is rounding noise relative to the
    // whole segment; budgets tighter than it are not certifiable in doubles.
    const double floor =
        50.0 * std::numeric_limits<double>::epsilon() * root_resabs;
    if (p.error <= budget || p.error <= floor) {
        acc.value += p.value;
        acc.error_estimate += p.error;
        return;
    }
    if (depth >= kMaxDepth) {
        std::ostringstream os;
        os << "quadrature failed to converge after " << kMaxDepth
           << " bisections (error estimate " << p.error << ", budget "
           << budget << ")";
        fail(errc::no_convergence, os.str());
    }
    cplx mid = 0.5 * (za + zb);
    adaptive(f, za, mid, 0.5 * budget, depth + 1, root_resabs, acc);
    adaptive(f, mid, zb, 0.5 * budget, depth + 1, root_resabs, acc);
}

} // namespace

QuadResult integrate_segment(const std::function<cplx(const cplx&)>& f,
                             cplx za, cplx zb, double budget) {
    QuadResult acc;
    if (za == zb) return acc;
    adaptive(f, za, zb, budget, 0, 0.0, acc);
    return acc;
}

RealQuadResult tanh_sinh(
    const std::function<double(double x, double d_lo, double d_hi)>& f,
    double lo, double hi, double tol) {
    if (!(hi > lo)) fail(errc::invalid_argument, "tanh_sinh needs lo < hi");
    const double c = 0.5 * (lo + hi);
    const double s = 0.5 * (hi - lo);
    constexpr double half_pi = 1.5707963267948966;

    RealQuadResult out;

    // One transformed sample.  u = (pi/2) sinh t; the endpoint distances are
    // computed through exp so they stay accurate down to ~1e-300.
    auto term = [&](double t, double& val) -> bool {
        double u = half_pi * std::sinh(t);
        if (std::fabs(u) > 350.0) return false;
        double e2u = std::exp(2.0 * u);
        double d_hi = 2.0 * s / (1.0 + e2u);        // hi - x
        double d_lo = 2.0 * s / (1.0 + 1.0 / e2u);  // x - lo
        double x = (d_lo < d_hi) ? lo + d_lo : hi - d_hi;
        double w = half_pi * std::cosh(t) *
                   (4.0 / ((e2u + 2.0 + 1.0 / e2u)));  // sech^2(u)
        val = w * f(x, d_lo, d_hi);
        if (!std::isfinite(val))
            fail(errc::no_convergence,
                 "integrand returned a non-finite value");
        return true;
    };

    // Level 0: step 1, all integer nodes.  Level L: step 2^-L, odd multiples.
    double h = 1.0;
    double sum = 0.0;
    {
        double val;
        if (term(0.0, val)) {
            sum += val;
            ++out.evaluations;
        }
        for (int sign = -1; sign <= 1; sign += 2) {
            int below = 0;
            for (int k = 1; k * h <= kTMax; ++k) {
                double t = sign * k * h;
                if (!term(t, val)) break;
                sum += val;
                ++out.evaluations;
                double scale = std::max(std::fabs(sum), 1.0);
                if (std::fabs(val) < 1e-18 * scale) {
                    if (++below >= 2) break;
                } else {
                    below = 0;
                }
            }
        }
    }
    double integral = h * sum * s;
    double err = std::fabs(integral);

    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        double new_sum = 0.0;
        double val;
        for (int sign = -1; sign <= 1; sign += 2) {
            int below = 0;
            for (long k = 1; k * h <= kTMax; k += 2) {
                double t = sign * static_cast<double>(k) * h;
                if (!term(t, val)) break;
                new_sum += val;
                ++out.evaluations;
                double scale =
                    std::max({std::fabs(sum), std::fabs(new_sum), 1.0});
                if (std::fabs(val) < 1e-18 * scale) {
                    if (++below >= 2) break;
                } else {
                    below = 0;
                }
            }
        }
        sum += new_sum;  // old nodes keep their t values under h -> h/2
        double prev = integral;
        integral = h * sum * s;
        err = std::fabs(integral - prev);
        double scale = std::max(1.0, std::fabs(integral));
        if (level >= 2 && err <= tol * scale) {
            out.value = integral;
            out.error_estimate = err;
            return out;
        }
    }
    std::ostringstream os;
    os << "tanh-sinh quadrature failed to reach tol " << tol << " (last diff "
       << err << ")";
    fail(errc::no_convergence, os.str());
}

RealQuadResult tanh_sinh(const std::function<double(double)>& f, double lo,
                         double hi, double tol) {
    return tanh_sinh([&](double x, double, double) { return f(x); }, lo, hi,
                     tol);
}

} // namespace hyptor
