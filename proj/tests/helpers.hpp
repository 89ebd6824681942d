#pragma once

#include <random>
#include <vector>

#include "core/config.hpp"
#include "core/error.hpp"

namespace testutil {

// Error code raised by f, or errc::ok if it returns normally.
template <class F>
hyptor::errc code_of(F&& f) {
    try {
        f();
    } catch (const hyptor::error& e) {
        return e.code();
    }
    return hyptor::errc::ok;
}

// Uniform double in [0,1) from the top 53 bits, identical on every platform.
inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random valid configuration of genus g with all margins and pair widths at
// least min_sep (generic by construction).
inline std::vector<double> random_generic(std::mt19937_64& rng, int g,
                                          double min_sep = 0.02) {
    while (true) {
        std::vector<double> pts(static_cast<size_t>(2 * g));
        for (double& p : pts) p = -0.95 + 1.9 * unit(rng);
        std::sort(pts.begin(), pts.end());
        double sep = 2.0;
        for (size_t i = 1; i < pts.size(); ++i)
            sep = std::min(sep, pts[i] - pts[i - 1]);
        if (sep >= min_sep) return pts;
    }
}

// Random strictly increasing degenerate tuple with separation >= min_sep.
inline std::vector<double> random_degenerate(std::mt19937_64& rng, int g,
                                             double min_sep = 0.05) {
    while (true) {
        std::vector<double> b(static_cast<size_t>(g));
        for (double& x : b) x = -0.9 + 1.8 * unit(rng);
        std::sort(b.begin(), b.end());
        bool ok = true;
        for (size_t i = 1; i < b.size(); ++i)
            if (b[i] - b[i - 1] < min_sep) ok = false;
        if (ok) return b;
    }
}

} // namespace testutil
