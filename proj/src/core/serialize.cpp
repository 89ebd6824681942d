#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "branch.hpp"
#include "oracle.hpp"

namespace hyptor {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

std::string arr(const std::vector<double>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += json_double(v[i]);
    }
    return out + "]";
}

std::string arr(const Vector& v) {
    return arr(std::vector<double>(v.data(), v.data() + v.size()));
}

std::string mat(const Matrix& M) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        if (i) out += ",";
        out += "[";
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (j) out += ",";
            out += json_double(M(i, j));
        }
        out += "]";
    }
    return out + "]";
}

std::string rationals(const std::vector<Rational>& t) {
    std::string out = "[";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += "{\"p\":" + std::to_string(t[i].p) +
               ",\"q\":" + std::to_string(t[i].q) + "}";
    }
    return out + "]";
}

} // namespace

std::string json_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_json(const PeriodData& pd) {
    std::string out = "{";
    out += "\"g\":" + std::to_string(pd.g);
    out += ",\"a\":" + arr(pd.a);
    out += ",\"M\":" + mat(pd.M);
    out += ",\"v\":" + arr(pd.v);
    out += ",\"u\":" + arr(pd.u);
    out += ",\"cond_M\":" + json_double(pd.cond_M);
    out += ",\"max_imag\":" + json_double(pd.max_imag);
    out += ",\"tol\":" + json_double(pd.tol);
    return out + "}";
}

std::string to_json(const DegenerateClosedForm& cf) {
    Matrix M = Matrix::Zero(cf.g, cf.g);
    for (int i = 0; i < cf.g; ++i) M(i, i) = cf.M_diag[static_cast<size_t>(i)];
    std::string out = "{";
    out += "\"g\":" + std::to_string(cf.g);
    out += ",\"b\":" + arr(cf.b);
    out += ",\"M\":" + mat(M);
    out += ",\"v\":" + arr(cf.v);
    out += ",\"u\":" + arr(cf.u);
    out += ",\"du_db_diag\":" + arr(cf.du_db_diag);
    return out + "}";
}

std::string to_json(const TorsionCertificate& cert) {
    std::string out = "{";
    out += "\"a0\":" + arr(cert.a0);
    out += ",\"a_star\":" + arr(cert.a_star);
    out += ",\"target\":" + rationals(cert.target);
    out += ",\"residual\":" + json_double(cert.residual);
    out += ",\"distance\":" + json_double(cert.distance);
    out += ",\"iterations\":" + std::to_string(cert.iterations);
    return out + "}";
}

std::string to_json(const DensityReport& rep) {
    std::string out = "{";
    out += "\"genus\":" + std::to_string(rep.genus);
    out += ",\"grid_per_axis\":" + std::to_string(rep.grid_per_axis);
    out += ",\"q_max\":" + std::to_string(rep.q_max);
    out += ",\"tol\":" + json_double(rep.tol);
    out += ",\"total\":" + std::to_string(rep.total);
    out += ",\"converged\":" + std::to_string(rep.converged);
    out += ",\"success_rate\":" + json_double(rep.success_rate);
    out += ",\"max_distance\":" + json_double(rep.max_distance);
    out += ",\"max_residual\":" + json_double(rep.max_residual);
    out += ",\"points\":[";
    for (size_t i = 0; i < rep.points.size(); ++i) {
        const ScanPoint& pt = rep.points[i];
        if (i) out += ",";
        out += "{\"b\":" + arr(pt.b);
        out += ",\"converged\":";
        out += pt.converged ? "true" : "false";
        out += ",\"status\":\"" + escape(pt.status) + "\"";
        out += ",\"residual\":" + json_double(pt.residual);
        out += ",\"distance\":" + json_double(pt.distance);
        out += ",\"iterations\":" + std::to_string(pt.iterations);
        out += ",\"target\":" + rationals(pt.target);
        out += "}";
    }
    return out + "]}";
}

std::string jacobian_json(const Configuration& a, double h, double tol) {
    Matrix J = jacobian_u(a, h, tol);
    std::vector<double> sv = singular_values(J);
    int r = matrix_rank(J);
    std::string out = "{";
    out += "\"g\":" + std::to_string(a.genus());
    out += ",\"a\":" + arr(a.values());
    out += ",\"h\":" + json_double(h);
    out += ",\"J\":" + mat(J);
    out += ",\"singular_values\":" + arr(sv);
    out += ",\"rank\":" + std::to_string(r);
    return out + "}";
}

std::string degenerate_json(const DegenerateConfig& b, double tol) {
    DegenerateClosedForm cf = closed_form(b);
    Configuration cfg = Configuration::from_degenerate(b);
    Basis pf = Basis::partial_fraction(b);
    PeriodData pd = reduced_vector(cfg, pf, tol);

    double dev = 0.0;
    for (int i = 0; i < cf.g; ++i) {
        for (int j = 0; j < cf.g; ++j) {
            double ref = i == j ? cf.M_diag[static_cast<size_t>(i)] : 0.0;
            dev = std::max(dev, std::fabs(pd.M(i, j) - ref));
        }
        dev = std::max(dev, std::fabs(pd.v(i) - cf.v[static_cast<size_t>(i)]));
        dev = std::max(dev, std::fabs(pd.u(i) - cf.u[static_cast<size_t>(i)]));
    }

    std::string out = to_json(cf);
    out.pop_back(); // reopen the object
    out += ",\"max_deviation_from_engine\":" + json_double(dev);
    return out + "}";
}

std::string verify_json(const Configuration& a, double tol,
                        std::uint64_t seed) {
    const int g = a.genus();
    const double thresh = std::max(1e-10, 10.0 * tol);

    struct Check {
        std::string name;
        double lhs, rhs;
    };
    std::vector<Check> checks;

    Basis basis = Basis::standard(g);
    Matrix M = period_matrix(a, basis, tol);
    Vector v_line = v_vector(a, basis, tol);
    Vector v_ctr = v_vector_contour(a, basis, tol);
    for (int i = 0; i < g; ++i)
        checks.push_back({"v_line_vs_contour_" + std::to_string(i + 1),
                          v_line(i), v_ctr(i)});

    if (a.classification() == Classification::generic) {
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                checks.push_back({"M_contour_vs_interval_" +
                                      std::to_string(i + 1) + "_" +
                                      std::to_string(j + 1),
                                  M(i, j), real_interval_period(a, i, j, tol)});
        if (g == 1)
            checks.push_back({"M_contour_vs_agm_1_1", M(0, 0), agm_period(a)});
    } else if (a.classification() == Classification::fully_degenerate) {
        std::vector<double> bvals(static_cast<size_t>(g));
        for (int j = 0; j < g; ++j)
            bvals[static_cast<size_t>(j)] = a.pair_lo(j);
        DegenerateClosedForm cf = closed_form(DegenerateConfig::validate(bvals));
        Basis pf = Basis::partial_fraction(DegenerateConfig::validate(bvals));
        PeriodData pd = reduced_vector(a, pf, tol);
        double offdiag = 0.0;
        for (int i = 0; i < g; ++i) {
            checks.push_back({"M_pf_diag_vs_closed_" + std::to_string(i + 1),
                              pd.M(i, i), cf.M_diag[static_cast<size_t>(i)]});
            checks.push_back({"u_engine_vs_closed_" + std::to_string(i + 1),
                              pd.u(i), cf.u[static_cast<size_t>(i)]});
            for (int j = 0; j < g; ++j)
                if (i != j) offdiag = std::max(offdiag, std::fabs(pd.M(i, j)));
        }
        if (g > 1) checks.push_back({"M_pf_offdiag_max", offdiag, 0.0});
    }

    // Seeded spot check that the assembled square roots square back to f
    // (x-plane) and F (z-plane) away from the cuts.
    BranchedSqrt br(a);
    std::mt19937_64 rng(seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    double worst_x = 0.0, worst_z = 0.0;
    int found = 0;
    for (int tries = 0; tries < 100000 && found < 32; ++tries) {
        cplx x(-2.0 + 4.0 * unit(), -1.5 + 3.0 * unit());
        if (br.distance_to_cuts(x) < 0.05) continue;
        cplx s = br.sqrt_f(x);
        cplx fx = br.f(x);
        worst_x = std::max(worst_x,
                           std::abs(s * s - fx) / std::max(1.0, std::abs(fx)));
        ++found;
    }
    for (int k = 0; k < 32; ++k) {
        double re = -0.9 + 1.8 * unit();
        double im = (0.05 + 0.85 * unit()) * (k % 2 ? 1.0 : -1.0);
        cplx z(re, im);
        Side side = k % 2 ? Side::upper : Side::lower;
        cplx s = br.sqrt_F(z, side);
        cplx Fz = br.F(z);
        worst_z = std::max(worst_z,
                           std::abs(s * s - Fz) / std::max(1.0, std::abs(Fz)));
    }
    checks.push_back({"branch_identity_x_plane_max_rel", worst_x, 0.0});
    checks.push_back({"branch_identity_z_plane_max_rel", worst_z, 0.0});

    double max_diff = 0.0;
    bool all_pass = true;
    std::string body = "[";
    for (size_t i = 0; i < checks.size(); ++i) {
        double d = std::fabs(checks[i].lhs - checks[i].rhs);
        bool pass = d < thresh;
        max_diff = std::max(max_diff, d);
        all_pass = all_pass && pass;
        if (i) body += ",";
        body += "{\"name\":\"" + escape(checks[i].name) + "\"";
        body += ",\"lhs\":" + json_double(checks[i].lhs);
        body += ",\"rhs\":" + json_double(checks[i].rhs);
        body += ",\"abs_diff\":" + json_double(d);
        body += ",\"pass\":";
        body += pass ? "true" : "false";
        body += "}";
    }
    body += "]";

    std::string out = "{";
    out += "\"g\":" + std::to_string(g);
    out += ",\"a\":" + arr(a.values());
    out += ",\"classification\":\"";
    out += classification_name(a.classification());
    out += "\"";
    out += ",\"tol\":" + json_double(tol);
    out += ",\"seed\":" + std::to_string(seed);
    out += ",\"threshold\":" + json_double(thresh);
    out += ",\"checks\":" + body;
    out += ",\"max_abs_diff\":" + json_double(max_diff);
    out += ",\"pass\":";
    out += all_pass ? "true" : "false";
    return out + "}";
}

std::string error_json(errc code, const std::string& message) {
    return std::string("{\"code\":\"") + errc_name(code) + "\",\"message\":\"" +
           escape(message) + "\"}";
}

} // namespace hyptor
