#pragma once

#include <stdexcept>
#include <string>

namespace civ {

/// Caller broke a documented precondition (bad width, zero passed to an Elias code, ...).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// The input cannot be represented by the requested structure.
struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Query outside the valid domain (index >= n, rank >= r, exhausted cursor).
struct QueryError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Malformed serialized data.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace civ
