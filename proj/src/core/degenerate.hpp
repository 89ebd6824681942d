#pragma once

#include "config.hpp"
#include "periods.hpp"

namespace hyptor {

/// Closed forms on the coincidence locus, where the curve degenerates to a
/// nodal rational curve and every period collapses to elementary functions.
/// In the partial fraction basis the period matrix is diagonal.
struct DegenerateClosedForm {
    int g = 0;
    std::vector<double> b;
    std::vector<double> M_diag;     // 2*pi / sqrt(1 - b_i^2)
    std::vector<double> v;          // 2*arccos(-b_i) / sqrt(1 - b_i^2)
    std::vector<double> u;          // arccos(-b_i) / pi
    std::vector<double> du_db_diag; // 1 / (pi * sqrt(1 - b_i^2))
};

DegenerateClosedForm closed_form(const DegenerateConfig& b);

/// Largest |M_ij|, i != j, produced by the general contour engine in the
/// partial fraction basis at the degenerate point.  Returns 0 for g = 1.
double offdiagonal_check(const DegenerateConfig& b, double tol);

/// Diagonal period via the residue theorem: 2*pi*i * Res at x = b_i of
/// dx / ((x - b_i) sqrt(x^2-1)), evaluated with the branch module.
double residue_period(const DegenerateConfig& b, int i);

/// v_i recomputed through the rational substitution t = x - sqrt(x^2-1),
/// which turns the branch-point-to-infinity period into
/// int_0^1 4 dt / (t^2 - 2 b_i t + 1).
double v_via_t_substitution(const DegenerateConfig& b, int i, double tol);

} // namespace hyptor
