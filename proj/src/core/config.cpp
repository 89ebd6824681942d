#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyptor {

namespace {

constexpr double kNearDegenerate = 1e-12;

std::string tuple_str(std::span<const double> v) {
    std::ostringstream os;
    os.precision(17);
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

} // namespace

const char* errc_name(errc code) {
    switch (code) {
        case errc::ok: return "OK";
        case errc::odd_length: return "ODD_LENGTH";
        case errc::endpoint_violation: return "ENDPOINT_VIOLATION";
        case errc::pair_overlap: return "PAIR_OVERLAP";
        case errc::on_cut: return "ON_CUT";
        case errc::no_convergence: return "NO_CONVERGENCE";
        case errc::imag_too_large: return "IMAG_TOO_LARGE";
        case errc::singular_m: return "SINGULAR_M";
        case errc::not_generic: return "NOT_GENERIC";
        case errc::not_genus_1: return "NOT_GENUS_1";
        case errc::rank_deficient: return "RANK_DEFICIENT";
        case errc::left_domain: return "LEFT_DOMAIN";
        case errc::margin_too_small: return "MARGIN_TOO_SMALL";
        case errc::invalid_argument: return "INVALID_ARGUMENT";
        case errc::internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::generic: return "GENERIC";
        case Classification::partially_degenerate: return "DEGENERATE_AT";
        case Classification::fully_degenerate: return "FULLY_DEGENERATE";
    }
    return "UNKNOWN";
}

DegenerateConfig DegenerateConfig::validate(std::span<const double> b) {
    if (b.empty())
        fail(errc::invalid_argument, "degenerate tuple must be nonempty");
    DegenerateConfig out;
    out.b_.assign(b.begin(), b.end());
    for (size_t i = 0; i < out.b_.size(); ++i) {
        if (!std::isfinite(out.b_[i]))
            fail(errc::invalid_argument, "b contains a non-finite value");
        if (!(out.b_[i] > -1.0 && out.b_[i] < 1.0)) {
            std::ostringstream os;
            os.precision(17);
            os << "b[" << i + 1 << "] = " << out.b_[i]
               << " violates -1 < b_i < 1";
            fail(errc::endpoint_violation, os.str());
        }
    }
    for (size_t i = 0; i + 1 < out.b_.size(); ++i) {
        if (!(out.b_[i] < out.b_[i + 1])) {
            std::ostringstream os;
            os.precision(17);
            os << "b[" << i + 1 << "] = " << out.b_[i] << " and b[" << i + 2
               << "] = " << out.b_[i + 1] << " violate b_i < b_{i+1}";
            fail(errc::pair_overlap, os.str());
        }
    }
    return out;
}

Configuration Configuration::validate(std::span<const double> a) {
    if (a.empty() || a.size() % 2 != 0) {
        std::ostringstream os;
        os << "tuple length " << a.size()
           << " is not a positive even number";
        fail(errc::odd_length, os.str());
    }
    Configuration out;
    out.g_ = static_cast<int>(a.size() / 2);
    out.a_.assign(a.begin(), a.end());
    for (size_t i = 0; i < out.a_.size(); ++i) {
        if (!std::isfinite(out.a_[i]))
            fail(errc::invalid_argument, "a contains a non-finite value");
        if (!(out.a_[i] > -1.0 && out.a_[i] < 1.0)) {
            std::ostringstream os;
            os.precision(17);
            os << "a[" << i + 1 << "] = " << out.a_[i]
               << " violates -1 < a_i < 1";
            fail(errc::endpoint_violation, os.str());
        }
    }
    // Normalize: each pair ascending.  Within-pair order is immaterial.
    for (int j = 0; j < out.g_; ++j) {
        double& lo = out.a_[2 * static_cast<size_t>(j)];
        double& hi = out.a_[2 * static_cast<size_t>(j) + 1];
        if (lo > hi) std::swap(lo, hi);
    }
    // Pairs must be strictly separated: hi_j < lo_{j+1}.
    for (int j = 0; j + 1 < out.g_; ++j) {
        double hi = out.pair_hi(j);
        double lo_next = out.pair_lo(j + 1);
        if (!(hi < lo_next)) {
            std::ostringstream os;
            os.precision(17);
            os << "pairs " << j + 1 << " and " << j + 2 << " of "
               << tuple_str(out.a_) << " violate max(pair " << j + 1
               << ") = " << hi << " < min(pair " << j + 2 << ") = " << lo_next;
            fail(errc::pair_overlap, os.str());
        }
    }
    return out;
}

Configuration Configuration::from_degenerate(const DegenerateConfig& b) {
    std::vector<double> a;
    a.reserve(2 * b.values().size());
    for (double bi : b.values()) {
        a.push_back(bi);
        a.push_back(bi);
    }
    return validate(a);
}

Classification Configuration::classification() const {
    int n_deg = static_cast<int>(degenerate_pairs().size());
    if (n_deg == 0) return Classification::generic;
    if (n_deg == g_) return Classification::fully_degenerate;
    return Classification::partially_degenerate;
}

std::vector<int> Configuration::degenerate_pairs() const {
    std::vector<int> out;
    for (int j = 0; j < g_; ++j)
        if (pair_degenerate(j)) out.push_back(j);
    return out;
}

std::vector<int> Configuration::near_degenerate_pairs() const {
    std::vector<int> out;
    for (int j = 0; j < g_; ++j) {
        double w = pair_hi(j) - pair_lo(j);
        if (w > 0.0 && w < kNearDegenerate) out.push_back(j);
    }
    return out;
}

std::vector<double> Configuration::margins() const {
    std::vector<double> m;
    m.reserve(static_cast<size_t>(g_) + 1);
    m.push_back(pair_lo(0) - (-1.0));
    for (int j = 0; j + 1 < g_; ++j) m.push_back(pair_lo(j + 1) - pair_hi(j));
    m.push_back(1.0 - pair_hi(g_ - 1));
    return m;
}

} // namespace hyptor
