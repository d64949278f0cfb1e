#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nodalis {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (polynomials, scalars, field specs).
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// A mathematical precondition of the requested operation does not hold
/// (point is not an ordinary double point, Y-axis is tangent, ...).
struct PreconditionError : Error {
    using Error::Error;
};

/// The working precision is too low to decide the question; callers may
/// escalate and retry.
struct InsufficientPrecision : Error {
    using Error::Error;
};

/// Bad configuration (unknown field spec, invalid prime, ...).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace nodalis
