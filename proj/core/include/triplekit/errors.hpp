#pragma once

#include <stdexcept>
#include <string>

namespace triplekit {

/// Base class for all triplekit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (scalars, JSON algebra files).
struct ParseError : Error {
    using Error::Error;
};

/// Mismatched dimensions between spaces, tensors or vectors.
struct DimError : Error {
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// Division by zero in an exact field.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// An internal consistency check failed (indicates a bug, not bad input).
struct InternalError : Error {
    using Error::Error;
};

} // namespace triplekit
