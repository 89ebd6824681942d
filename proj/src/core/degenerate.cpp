#include "degenerate.hpp"

#include <cmath>
#include <numbers>

#include "branch.hpp"

namespace hyptor {

DegenerateClosedForm closed_form(const DegenerateConfig& bcfg) {
    constexpr double pi = std::numbers::pi;
    DegenerateClosedForm out;
    out.g = bcfg.genus();
    out.b = bcfg.values();
    out.M_diag.reserve(out.b.size());
    out.v.reserve(out.b.size());
    out.u.reserve(out.b.size());
    out.du_db_diag.reserve(out.b.size());
    for (double b : out.b) {
        double s = std::sqrt((1.0 - b) * (1.0 + b));
        double theta = std::acos(-b);
        out.M_diag.push_back(2.0 * pi / s);
        out.v.push_back(2.0 * theta / s);
        out.u.push_back(theta / pi);
        out.du_db_diag.push_back(1.0 / (pi * s));
    }
    return out;
}

double offdiagonal_check(const DegenerateConfig& bcfg, double tol) {
    if (bcfg.genus() == 1) return 0.0;
    Configuration config = Configuration::from_degenerate(bcfg);
    Basis basis = Basis::partial_fraction(bcfg);
    Matrix M = period_matrix(config, basis, tol);
    double worst = 0.0;
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (i != j) worst = std::max(worst, std::fabs(M(i, j)));
    return worst;
}

double residue_period(const DegenerateConfig& bcfg, int i) {
    if (i < 0 || i >= bcfg.genus())
        fail(errc::invalid_argument, "pair index out of range");
    cplx res = 1.0 / BranchedSqrt::sqrt_x2_minus_1(cplx(bcfg[i], 0.0));
    cplx period = cplx(0.0, 2.0 * std::numbers::pi) * res;
    return period.real();
}

double v_via_t_substitution(const DegenerateConfig& bcfg, int i, double tol) {
    if (i < 0 || i >= bcfg.genus())
        fail(errc::invalid_argument, "pair index out of range");
    double b = bcfg[i];
    auto f = [b](double t) { return 4.0 / (t * t - 2.0 * b * t + 1.0); };
    return tanh_sinh(std::function<double(double)>(f), 0.0, 1.0, tol).value;
}

} // namespace hyptor
