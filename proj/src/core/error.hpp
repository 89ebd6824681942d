#pragma once

#include <stdexcept>
#include <string>

namespace hyptor {

/// Failure categories surfaced through the C API and the CLI.
enum class errc {
    ok = 0,
    odd_length,
    endpoint_violation,
    pair_overlap,
    on_cut,
    no_convergence,
    imag_too_large,
    singular_m,
    not_generic,
    not_genus_1,
    rank_deficient,
    left_domain,
    margin_too_small,
    invalid_argument,
    internal,
};

const char* errc_name(errc code);

/// Exception carrying an errc; everything thrown by the core is one of these
/// (or std::bad_alloc).
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace hyptor
