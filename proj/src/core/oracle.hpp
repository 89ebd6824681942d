#pragma once

#include "config.hpp"

namespace hyptor {

/// Loop period M_ij recomputed as a real integral over the j-th cut interval
/// (standard basis, 0-based indices): 2 * sigma_j * int x^i / sqrt(f) with
/// the branch-consistent sign sigma_j = (-1)^(g-1-j).  GENERIC only.
double real_interval_period(const Configuration& config, int i, int j,
                            double tol);

/// Genus-1 period via the arithmetic-geometric mean: the four real branch
/// points reduce the cut integral to a complete elliptic integral K.
double agm_period(const Configuration& config);

/// K(k) with k' = sqrt(1-k^2) supplied directly: pi / (2 * AGM(1, k')).
double elliptic_K_from_kprime(double kprime);

/// K(k) for 0 <= k < 1.
double elliptic_K(double k);

} // namespace hyptor
