#pragma once

#include <stdexcept>
#include <string>

namespace ssq {

// Error taxonomy. "not a basis" and "determinant != 1" are distinct types so
// callers can normalize the second vector (unique_w_on_line) and retry.

struct invalid_argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct division_by_zero_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct invalid_partition_error : invalid_argument_error {
    using invalid_argument_error::invalid_argument_error;
};

struct unsupported_order_error : invalid_argument_error {
    using invalid_argument_error::invalid_argument_error;
};

struct not_a_basis_error : invalid_argument_error {
    using invalid_argument_error::invalid_argument_error;
};

struct determinant_not_one_error : invalid_argument_error {
    using invalid_argument_error::invalid_argument_error;
};

struct parse_error : invalid_argument_error {
    using invalid_argument_error::invalid_argument_error;
};

} // namespace ssq
