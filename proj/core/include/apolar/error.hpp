#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

// Exit-code contract used by the CLI and documented in README:
//   parse/schema failures -> 1, violated mathematical preconditions -> 2.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text or JSON (exit code 1).
struct parse_error : error {
    std::size_t offset;  // byte offset into the offending text, npos if n/a
    explicit parse_error(const std::string& msg, std::size_t off = std::string::npos)
        : error(msg), offset(off) {}
};
struct schema_error : parse_error {
    explicit schema_error(const std::string& msg) : parse_error(msg) {}
};

// Violated mathematical precondition (exit code 2).
struct precondition_error : error {
    std::string kind;  // stable machine-readable tag
    precondition_error(std::string k, const std::string& msg)
        : error(msg), kind(std::move(k)) {}
};

struct dimension_error : precondition_error {
    explicit dimension_error(const std::string& msg) : precondition_error("dimension", msg) {}
};
struct shape_error : precondition_error {
    explicit shape_error(const std::string& msg) : precondition_error("shape", msg) {}
};
struct order_error : precondition_error {
    explicit order_error(const std::string& msg) : precondition_error("order", msg) {}
};
struct degree_error : precondition_error {
    explicit degree_error(const std::string& msg) : precondition_error("degree", msg) {}
};
struct ring_mismatch_error : precondition_error {
    explicit ring_mismatch_error(const std::string& msg)
        : precondition_error("ring-mismatch", msg) {}
};
struct symmetry_error : precondition_error {
    explicit symmetry_error(const std::string& msg) : precondition_error("symmetry", msg) {}
};
struct degenerate_input_error : precondition_error {
    explicit degenerate_input_error(const std::string& msg)
        : precondition_error("degenerate-input", msg) {}
};
struct singular_catalecticant_error : precondition_error {
    explicit singular_catalecticant_error(const std::string& msg)
        : precondition_error("singular-catalecticant", msg) {}
};
struct unsupported_ambient_error : precondition_error {
    explicit unsupported_ambient_error(const std::string& msg)
        : precondition_error("unsupported-ambient", msg) {}
};
struct not_psd_error : precondition_error {
    int n_plus, n_minus, n_zero;  // signature that witnessed the failure
    not_psd_error(const std::string& msg, int p, int m, int z)
        : precondition_error("not-psd", msg), n_plus(p), n_minus(m), n_zero(z) {}
};
struct empty_statistics_error : precondition_error {
    explicit empty_statistics_error(const std::string& msg)
        : precondition_error("empty-statistics", msg) {}
};

}  // namespace apolar
