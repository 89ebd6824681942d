#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyptor.h"

namespace {

std::vector<double> parse_csv(const std::string& s) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string tok = s.substr(pos, comma - pos);
        size_t used = 0;
        double val = std::stod(tok, &used);
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
            ++used;
        if (used != tok.size())
            throw std::runtime_error("trailing characters in number: '" + tok + "'");
        out.push_back(val);
        pos = comma + 1;
    }
    return out;
}

std::string csv_cell(const nlohmann::json& v) {
    if (v.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char c : s) {
                if (c == '"') q += "\"\"";
                else q += c;
            }
            return q + "\"";
        }
        return s;
    }
    return v.dump();
}

void emit(const std::string& json, const std::string& format,
          const std::string& out_path) {
    std::string text;
    if (format == "csv") {
        nlohmann::json flat = nlohmann::json::parse(json).flatten();
        text = "key,value\n";
        for (const auto& [key, value] : flat.items())
            text += key + "," + csv_cell(value) + "\n";
    } else {
        text = json + "\n";
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + out_path);
        f << text;
    }
}

// Print the pending module error as JSON and exit 1.
[[noreturn]] void die_module() {
    char* err = nullptr;
    if (hyptor_last_error_json(&err) == HYPTOR_OK && err) {
        std::cout << err << "\n";
        hyptor_string_free(err);
    }
    std::exit(1);
}

struct ConfigHandle {
    hyptor_config* c = nullptr;
    ~ConfigHandle() { hyptor_config_free(c); }
};

hyptor_config* make_config(const std::vector<double>& a) {
    hyptor_config* c = nullptr;
    if (hyptor_config_create(a.data(), static_cast<int>(a.size()), &c) !=
        HYPTOR_OK)
        die_module();
    return c;
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    hyptor_string_free(s);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real periods and rational-torsion search for real "
                 "hyperelliptic curves y^2 = (x^2-1) prod (x - a_i)"};
    app.require_subcommand(1);

    std::string a_csv, b_csv, format = "json", out_path;
    double tol = 1e-12, h = 1e-6;
    long long qmax = 0;
    int g = 0, grid = 0, max_iter = 50;
    unsigned long long seed = 0;

    app.add_option("--tol", tol, "numerical tolerance")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized checks")
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to this file");

    auto* cmd_periods = app.add_subcommand(
        "periods", "period matrix M, vector v and u = M^-1 v");
    cmd_periods->add_option("--a", a_csv, "branch points a_1,...,a_2g")
        ->required();

    auto* cmd_degenerate = app.add_subcommand(
        "degenerate", "closed forms on the double-root locus");
    cmd_degenerate->add_option("--b", b_csv, "double roots b_1,...,b_g")
        ->required();

    auto* cmd_jacobian =
        app.add_subcommand("jacobian", "finite-difference Jacobian of u");
    cmd_jacobian->set_help_flag("--help", "print help"); // frees --h below
    cmd_jacobian->add_option("--a", a_csv, "branch points a_1,...,a_2g")
        ->required();
    cmd_jacobian->add_option("--h", h, "finite-difference step")
        ->capture_default_str();

    auto* cmd_torsion = app.add_subcommand(
        "torsion-find", "Gauss-Newton search for a nearby rational-u tuple");
    cmd_torsion->add_option("--a", a_csv, "branch points a_1,...,a_2g")
        ->required();
    cmd_torsion->add_option("--qmax", qmax, "denominator bound")->required();
    cmd_torsion->add_option("--max-iter", max_iter, "iteration cap")
        ->capture_default_str();

    auto* cmd_scan = app.add_subcommand(
        "scan", "torsion search over a degenerate-locus lattice");
    cmd_scan->add_option("--g", g, "genus")->required();
    cmd_scan->add_option("--grid", grid, "grid points per axis")->required();
    cmd_scan->add_option("--qmax", qmax, "denominator bound")->required();
    cmd_scan->add_option("--max-iter", max_iter, "iteration cap per point")
        ->capture_default_str();

    auto* cmd_verify = app.add_subcommand(
        "verify", "cross-method agreement table for one configuration");
    cmd_verify->add_option("--a", a_csv, "branch points a_1,...,a_2g")
        ->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        char* json = nullptr;
        if (*cmd_periods) {
            ConfigHandle cfg{make_config(parse_csv(a_csv))};
            hyptor_periods* p = nullptr;
            if (hyptor_periods_compute(cfg.c, tol, &p) != HYPTOR_OK)
                die_module();
            hyptor_status st = hyptor_periods_to_json(p, &json);
            hyptor_periods_free(p);
            if (st != HYPTOR_OK) die_module();
        } else if (*cmd_degenerate) {
            std::vector<double> b = parse_csv(b_csv);
            if (hyptor_degenerate_json(b.data(), static_cast<int>(b.size()),
                                       tol, &json) != HYPTOR_OK)
                die_module();
        } else if (*cmd_jacobian) {
            ConfigHandle cfg{make_config(parse_csv(a_csv))};
            if (hyptor_jacobian_json(cfg.c, h, tol, &json) != HYPTOR_OK)
                die_module();
        } else if (*cmd_torsion) {
            ConfigHandle cfg{make_config(parse_csv(a_csv))};
            hyptor_certificate* cert = nullptr;
            if (hyptor_find_torsion(cfg.c, qmax, tol, max_iter, &cert) !=
                HYPTOR_OK)
                die_module();
            hyptor_status st = hyptor_certificate_to_json(cert, &json);
            hyptor_certificate_free(cert);
            if (st != HYPTOR_OK) die_module();
        } else if (*cmd_scan) {
            if (hyptor_density_scan_json(g, grid, qmax, tol, max_iter,
                                         &json) != HYPTOR_OK)
                die_module();
        } else if (*cmd_verify) {
            ConfigHandle cfg{make_config(parse_csv(a_csv))};
            if (hyptor_verify_json(cfg.c, tol, seed, &json) != HYPTOR_OK)
                die_module();
        }
        emit(take_string(json), format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
