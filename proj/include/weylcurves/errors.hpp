#pragma once

#include <stdexcept>
#include <string>

namespace weylcurves {

// Bad caller input: malformed JSON, wrong index-set size, indices out of range.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The input is well formed but the mathematics does not apply to it:
// mismatched spaces, unsupported (r,s), violated preconditions.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DimensionError : DomainError {
    using DomainError::DomainError;
};

} // namespace weylcurves
