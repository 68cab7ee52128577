#pragma once

#include <stdexcept>
#include <string>

namespace pgolay {

// Failure conditions surfaced by the library. Each maps one-to-one onto a
// contract violation or data-dependent rejection; the CLI translates them
// into exit codes.
enum class errc {
    invalid_argument,
    odd_length,
    negative_lambda,
    parameter_infeasible,
    decomposition_fails,
    not_a_unit,
    not_a_representative,
    duplicate_index,
    not_orbit_union,
    not_complementary,
    odd_exponent,
    unreachable_cardinality,
    count_exceeds_lambda,
    incompatible_moduli,
    parse_error,
    param_mismatch,
    io_error,
    internal,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace pgolay
