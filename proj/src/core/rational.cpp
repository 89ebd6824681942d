#include "rational.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace hyptor {

namespace {

using i128 = __int128;

i128 iabs(i128 v) { return v < 0 ? -v : v; }

// Exact binary representation x = num / 2^shift with num odd (x > 0).
struct Dyadic {
    i128 num = 0;
    int shift = 0; // denominator is 2^shift
};

Dyadic decompose(double x) {
    int e = 0;
    double fr = std::frexp(x, &e); // x = fr * 2^e, fr in [0.5, 1)
    auto m = static_cast<long long>(std::ldexp(fr, 53)); // exact, < 2^53
    int s = 53 - e;
    while (m % 2 == 0 && s > 0) {
        m /= 2;
        --s;
    }
    return {static_cast<i128>(m), s};
}

// Compare |x - a.p/a.q| with |x - b.p/b.q|: negative if a closer, positive if
// b closer, zero on an exact tie.  Exact integer arithmetic when the cross
// products fit comfortably in 128 bits, long double otherwise (only reachable
// for |x| below ~2^-60, far outside the intended (0,1) inputs).
int compare_distance(const Dyadic& x, const Rational& a, const Rational& b) {
    if (x.shift <= 60) {
        i128 d = i128(1) << x.shift;
        i128 da = iabs(x.num * a.q - i128(a.p) * d) * b.q;
        i128 db = iabs(x.num * b.q - i128(b.p) * d) * a.q;
        if (da < db) return -1;
        if (da > db) return 1;
        return 0;
    }
    long double xv = std::ldexp(static_cast<long double>(static_cast<double>(x.num)),
                                -x.shift);
    long double da = fabsl(xv - static_cast<long double>(a.p) / a.q);
    long double db = fabsl(xv - static_cast<long double>(b.p) / b.q);
    if (da < db) return -1;
    if (da > db) return 1;
    return 0;
}

bool interior(const Rational& r) { return r.p > 0 && r.p < r.q; }

Rational pick(const Dyadic& x, const Rational& a, const Rational& b) {
    if (!interior(a)) return b;
    if (!interior(b)) return a;
    int c = compare_distance(x, a, b);
    if (c < 0) return a;
    if (c > 0) return b;
    if (a.q != b.q) return a.q < b.q ? a : b;
    return a.p < b.p ? a : b;
}

} // namespace

Rational nearest_rational(double x, long long q_max) {
    if (q_max < 2)
        fail(errc::invalid_argument,
             "nearest_rational: q_max must be >= 2, got " + std::to_string(q_max));
    if (q_max > (1LL << 31))
        fail(errc::invalid_argument,
             "nearest_rational: q_max must be <= 2^31 so exact comparisons "
             "fit in 128 bits, got " + std::to_string(q_max));
    if (!std::isfinite(x))
        fail(errc::invalid_argument, "nearest_rational: x is not finite");
    // Outside (0,1) the nearest interior fraction is an edge one.
    if (x <= 1.0 / static_cast<double>(q_max)) return {1, q_max};
    if (x >= 1.0 - 1.0 / static_cast<double>(q_max)) return {q_max - 1, q_max};

    Dyadic d = decompose(x);
    i128 den = i128(1) << d.shift;

    // Walk the continued fraction of num/2^shift, tracking convergents
    // h/k.  Stop when the denominator would exceed q_max; the best
    // approximation is then either the last convergent or the farthest
    // admissible semiconvergent built from it.
    i128 u = d.num, w = den;
    long long h_prev = 0, k_prev = 1; // convergent -2
    long long h = 1, k = 0;           // convergent -1
    while (w != 0) {
        i128 a = u / w;
        i128 r = u % w;
        i128 k_next = a * k + k_prev;
        if (k_next > q_max) {
            long long j = static_cast<long long>((q_max - k_prev) / k);
            Rational conv{h, k};
            Rational semi{j * h + h_prev, j * k + k_prev};
            if (j < 1) return pick(d, conv, conv);
            return pick(d, conv, semi);
        }
        long long h_next = static_cast<long long>(a) * h + h_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = static_cast<long long>(k_next);
        u = w;
        w = r;
    }
    return {h, k}; // exact: x = h/k with k <= q_max
}

std::vector<Rational> nearest_rationals(const std::vector<double>& u,
                                        long long q_max) {
    std::vector<Rational> out;
    out.reserve(u.size());
    for (double x : u) out.push_back(nearest_rational(x, q_max));
    return out;
}

} // namespace hyptor
