#include "hyptor.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/degenerate.hpp"
#include "core/error.hpp"
#include "core/oracle.hpp"
#include "core/periods.hpp"
#include "core/rational.hpp"
#include "core/serialize.hpp"
#include "core/torsion.hpp"

struct hyptor_config {
    hyptor::Configuration cfg;
};
struct hyptor_periods {
    hyptor::PeriodData pd;
};
struct hyptor_certificate {
    hyptor::TorsionCertificate cert;
};

namespace {

thread_local std::string t_last_error;
thread_local hyptor::errc t_last_code = hyptor::errc::ok;

hyptor_status map_code(hyptor::errc c) {
    using hyptor::errc;
    switch (c) {
    case errc::ok: return HYPTOR_OK;
    case errc::odd_length: return HYPTOR_ERR_ODD_LENGTH;
    case errc::endpoint_violation: return HYPTOR_ERR_ENDPOINT_VIOLATION;
    case errc::pair_overlap: return HYPTOR_ERR_PAIR_OVERLAP;
    case errc::on_cut: return HYPTOR_ERR_ON_CUT;
    case errc::no_convergence: return HYPTOR_ERR_NO_CONVERGENCE;
    case errc::imag_too_large: return HYPTOR_ERR_IMAG_TOO_LARGE;
    case errc::singular_m: return HYPTOR_ERR_SINGULAR_M;
    case errc::not_generic: return HYPTOR_ERR_NOT_GENERIC;
    case errc::not_genus_1: return HYPTOR_ERR_NOT_GENUS_1;
    case errc::rank_deficient: return HYPTOR_ERR_RANK_DEFICIENT;
    case errc::left_domain: return HYPTOR_ERR_LEFT_DOMAIN;
    case errc::margin_too_small: return HYPTOR_ERR_MARGIN_TOO_SMALL;
    case errc::invalid_argument: return HYPTOR_ERR_INVALID_ARGUMENT;
    case errc::internal: return HYPTOR_ERR_INTERNAL;
    }
    return HYPTOR_ERR_INTERNAL;
}

template <class F>
hyptor_status guarded(F&& fn) {
    try {
        fn();
        t_last_error.clear();
        t_last_code = hyptor::errc::ok;
        return HYPTOR_OK;
    } catch (const hyptor::error& e) {
        t_last_error = e.what();
        t_last_code = e.code();
        return map_code(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        t_last_code = hyptor::errc::internal;
        return HYPTOR_ERR_INTERNAL;
    }
}

hyptor_status set_string(const std::string& s, char** out) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) {
        t_last_error = "out of memory";
        return HYPTOR_ERR_INTERNAL;
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
    return HYPTOR_OK;
}

hyptor_status null_arg() {
    t_last_error = "null argument";
    t_last_code = hyptor::errc::invalid_argument;
    return HYPTOR_ERR_NULL_ARGUMENT;
}

} // namespace

extern "C" {

const char* hyptor_version(void) { return "1.0.0"; }

const char* hyptor_last_error(void) { return t_last_error.c_str(); }

hyptor_status hyptor_last_error_json(char** out) {
    if (!out) return null_arg();
    return set_string(hyptor::error_json(t_last_code, t_last_error), out);
}

void hyptor_string_free(char* s) { std::free(s); }

hyptor_status hyptor_config_create(const double* a, int n,
                                   hyptor_config** out) {
    if (!a || !out || n < 0) return null_arg();
    return guarded([&] {
        hyptor::Configuration cfg =
            hyptor::Configuration::validate(std::span<const double>(a, static_cast<size_t>(n)));
        *out = new hyptor_config{std::move(cfg)};
    });
}

hyptor_status hyptor_config_degenerate(const double* b, int g,
                                       hyptor_config** out) {
    if (!b || !out || g < 0) return null_arg();
    return guarded([&] {
        hyptor::DegenerateConfig bc = hyptor::DegenerateConfig::validate(
            std::span<const double>(b, static_cast<size_t>(g)));
        *out = new hyptor_config{hyptor::Configuration::from_degenerate(bc)};
    });
}

void hyptor_config_free(hyptor_config* c) { delete c; }

int hyptor_config_genus(const hyptor_config* c) {
    return c ? c->cfg.genus() : 0;
}

const char* hyptor_config_classification(const hyptor_config* c) {
    if (!c) return "";
    return hyptor::classification_name(c->cfg.classification());
}

hyptor_status hyptor_config_values(const hyptor_config* c, double* out) {
    if (!c || !out) return null_arg();
    const auto& v = c->cfg.values();
    std::memcpy(out, v.data(), v.size() * sizeof(double));
    return HYPTOR_OK;
}

hyptor_status hyptor_periods_compute(const hyptor_config* c, double tol,
                                     hyptor_periods** out) {
    if (!c || !out) return null_arg();
    return guarded([&] {
        *out = new hyptor_periods{hyptor::reduced_vector(c->cfg, tol)};
    });
}

void hyptor_periods_free(hyptor_periods* p) { delete p; }

int hyptor_periods_genus(const hyptor_periods* p) { return p ? p->pd.g : 0; }

hyptor_status hyptor_periods_matrix(const hyptor_periods* p, double* out) {
    if (!p || !out) return null_arg();
    const int g = p->pd.g;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) out[i * g + j] = p->pd.M(i, j);
    return HYPTOR_OK;
}

hyptor_status hyptor_periods_v(const hyptor_periods* p, double* out) {
    if (!p || !out) return null_arg();
    for (int i = 0; i < p->pd.g; ++i) out[i] = p->pd.v(i);
    return HYPTOR_OK;
}

hyptor_status hyptor_periods_u(const hyptor_periods* p, double* out) {
    if (!p || !out) return null_arg();
    for (int i = 0; i < p->pd.g; ++i) out[i] = p->pd.u(i);
    return HYPTOR_OK;
}

double hyptor_periods_cond(const hyptor_periods* p) {
    return p ? p->pd.cond_M : 0.0;
}

double hyptor_periods_max_imag(const hyptor_periods* p) {
    return p ? p->pd.max_imag : 0.0;
}

hyptor_status hyptor_periods_to_json(const hyptor_periods* p, char** out) {
    if (!p || !out) return null_arg();
    return set_string(hyptor::to_json(p->pd), out);
}

hyptor_status hyptor_degenerate_json(const double* b, int g, double tol,
                                     char** out) {
    if (!b || !out || g < 0) return null_arg();
    return guarded([&] {
        hyptor::DegenerateConfig bc = hyptor::DegenerateConfig::validate(
            std::span<const double>(b, static_cast<size_t>(g)));
        std::string s = hyptor::degenerate_json(bc, tol);
        if (set_string(s, out) != HYPTOR_OK)
            hyptor::fail(hyptor::errc::internal, "out of memory");
    });
}

hyptor_status hyptor_jacobian_json(const hyptor_config* c, double h,
                                   double tol, char** out) {
    if (!c || !out) return null_arg();
    return guarded([&] {
        std::string s = hyptor::jacobian_json(c->cfg, h, tol);
        if (set_string(s, out) != HYPTOR_OK)
            hyptor::fail(hyptor::errc::internal, "out of memory");
    });
}

hyptor_status hyptor_matrix_rank(const double* J, int rows, int cols,
                                 double rel_threshold, int* out) {
    if (!J || !out || rows < 1 || cols < 1) return null_arg();
    return guarded([&] {
        hyptor::Matrix M(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) M(i, j) = J[i * cols + j];
        *out = hyptor::matrix_rank(M, rel_threshold);
    });
}

hyptor_status hyptor_nearest_rationals(const double* u, int g, long long q_max,
                                       long long* p_out, long long* q_out) {
    if (!u || !p_out || !q_out || g < 1) return null_arg();
    return guarded([&] {
        std::vector<double> uv(u, u + g);
        std::vector<hyptor::Rational> r = hyptor::nearest_rationals(uv, q_max);
        for (int i = 0; i < g; ++i) {
            p_out[i] = r[static_cast<size_t>(i)].p;
            q_out[i] = r[static_cast<size_t>(i)].q;
        }
    });
}

hyptor_status hyptor_find_torsion(const hyptor_config* c, long long q_max,
                                  double tol, int max_iter,
                                  hyptor_certificate** out) {
    if (!c || !out) return null_arg();
    return guarded([&] {
        *out = new hyptor_certificate{
            hyptor::find_torsion_near(c->cfg, q_max, tol, max_iter)};
    });
}

void hyptor_certificate_free(hyptor_certificate* cert) { delete cert; }

double hyptor_certificate_residual(const hyptor_certificate* cert) {
    return cert ? cert->cert.residual : 0.0;
}

double hyptor_certificate_distance(const hyptor_certificate* cert) {
    return cert ? cert->cert.distance : 0.0;
}

int hyptor_certificate_iterations(const hyptor_certificate* cert) {
    return cert ? cert->cert.iterations : 0;
}

hyptor_status hyptor_certificate_a_star(const hyptor_certificate* cert,
                                        double* out) {
    if (!cert || !out) return null_arg();
    const auto& a = cert->cert.a_star;
    std::memcpy(out, a.data(), a.size() * sizeof(double));
    return HYPTOR_OK;
}

hyptor_status hyptor_certificate_to_json(const hyptor_certificate* cert,
                                         char** out) {
    if (!cert || !out) return null_arg();
    return set_string(hyptor::to_json(cert->cert), out);
}

hyptor_status hyptor_density_scan_json(int g, int grid_per_axis,
                                       long long q_max, double tol,
                                       int max_iter, char** out) {
    if (!out) return null_arg();
    return guarded([&] {
        hyptor::DensityReport rep =
            hyptor::density_scan(g, grid_per_axis, q_max, tol, max_iter);
        std::string s = hyptor::to_json(rep);
        if (set_string(s, out) != HYPTOR_OK)
            hyptor::fail(hyptor::errc::internal, "out of memory");
    });
}

hyptor_status hyptor_real_interval_period(const hyptor_config* c, int i, int j,
                                          double tol, double* out) {
    if (!c || !out) return null_arg();
    return guarded(
        [&] { *out = hyptor::real_interval_period(c->cfg, i - 1, j - 1, tol); });
}

hyptor_status hyptor_agm_period(const hyptor_config* c, double* out) {
    if (!c || !out) return null_arg();
    return guarded([&] { *out = hyptor::agm_period(c->cfg); });
}

hyptor_status hyptor_verify_json(const hyptor_config* c, double tol,
                                 unsigned long long seed, char** out) {
    if (!c || !out) return null_arg();
    return guarded([&] {
        std::string s = hyptor::verify_json(c->cfg, tol, seed);
        if (set_string(s, out) != HYPTOR_OK)
            hyptor::fail(hyptor::errc::internal, "out of memory");
    });
}

} // extern "C"
