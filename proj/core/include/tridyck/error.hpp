#pragma once

#include <stdexcept>
#include <string>

namespace tridyck {

enum class Errc {
    invalid_partition,
    cell_outside_shape,
    empty_partition,
    not_triangular,
    containment_violation,
    invalid_tableau,
    index_out_of_range,
    parameter_out_of_range,
    shape_mismatch,
    not_two_part,
    not_symmetric,
    reconstruction_mismatch,
    degree_overflow,
    arity_mismatch,
    overflow,
    unknown_suite,
    parse_error,
    internal_error,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace tridyck
