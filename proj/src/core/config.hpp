#pragma once

#include <span>
#include <vector>

#include "error.hpp"

namespace hyptor {

enum class Classification {
    generic,               // all pairs have distinct members
    partially_degenerate,  // some pairs coincide
    fully_degenerate,      // every pair coincides
};

const char* classification_name(Classification c);

class Configuration;

/// A point of the coincidence locus: strictly increasing b in (-1,1), one
/// value per pair.
class DegenerateConfig {
  public:
    static DegenerateConfig validate(std::span<const double> b);

    int genus() const { return static_cast<int>(b_.size()); }
    const std::vector<double>& values() const { return b_; }
    double operator[](int i) const { return b_[static_cast<size_t>(i)]; }

  private:
    DegenerateConfig() = default;
    std::vector<double> b_;
};

/// A branch-point tuple (a_1, ..., a_2g) in (-1,1), grouped in consecutive
/// pairs.  Stored normalized: each pair sorted ascending.  Pairs must occupy
/// disjoint closed intervals, strictly ordered left to right; a pair may
/// collapse to a single double root.
class Configuration {
  public:
    static Configuration validate(std::span<const double> a);
    static Configuration from_degenerate(const DegenerateConfig& b);

    int genus() const { return g_; }
    const std::vector<double>& values() const { return a_; }

    double pair_lo(int j) const { return a_[2 * static_cast<size_t>(j)]; }
    double pair_hi(int j) const { return a_[2 * static_cast<size_t>(j) + 1]; }
    bool pair_degenerate(int j) const { return pair_lo(j) == pair_hi(j); }

    Classification classification() const;
    std::vector<int> degenerate_pairs() const;

    /// Pairs with 0 < width < 1e-12: valid but numerically delicate.
    std::vector<int> near_degenerate_pairs() const;

    /// The g+1 gap widths separating the cut clusters:
    /// (-1, lo_1), (hi_1, lo_2), ..., (hi_g, 1).  All strictly positive.
    std::vector<double> margins() const;

    double max_value() const { return a_.back(); }

  private:
    Configuration() = default;
    int g_ = 0;
    std::vector<double> a_;
};

} // namespace hyptor
