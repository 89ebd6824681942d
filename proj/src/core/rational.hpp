#pragma once

#include <vector>

#include "error.hpp"

namespace hyptor {

/// A reduced fraction p/q in (0, 1).
struct Rational {
    long long p = 0;
    long long q = 1;
    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
};

/// Best rational approximation to x in (0,1) with denominator <= q_max
/// (q_max >= 2), computed from the continued fraction of the exact binary
/// value of x; candidates compared exactly.  Ties break toward the smaller
/// denominator, then the smaller numerator.  The result always satisfies
/// 0 < p/q < 1.
Rational nearest_rational(double x, long long q_max);

std::vector<Rational> nearest_rationals(const std::vector<double>& u,
                                        long long q_max);

} // namespace hyptor
