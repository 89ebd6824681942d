#pragma once

#include <cstdint>
#include <string>

#include "config.hpp"
#include "degenerate.hpp"
#include "periods.hpp"
#include "torsion.hpp"

namespace hyptor {

/// %.17g rendering; non-finite values become null.  All JSON output goes
/// through this so identical inputs give byte-identical documents.
std::string json_double(double x);

std::string to_json(const PeriodData& pd);
std::string to_json(const DegenerateClosedForm& cf);
std::string to_json(const TorsionCertificate& cert);
std::string to_json(const DensityReport& rep);

/// Jacobian report: computes J at a with step h, emits matrix, singular
/// values and rank.
std::string jacobian_json(const Configuration& a, double h, double tol);

/// Closed form on the degenerate locus plus its maximum deviation from the
/// general contour engine evaluated at the embedded tuple.
std::string degenerate_json(const DegenerateConfig& b, double tol);

/// Cross-method agreement table: contour matrix vs real-interval quadrature
/// (generic tuples), AGM (genus 1), line vs contour v, closed forms on the
/// degenerate locus, and a seeded sample of branch-identity checks.
std::string verify_json(const Configuration& a, double tol, std::uint64_t seed);

std::string error_json(errc code, const std::string& message);

} // namespace hyptor
