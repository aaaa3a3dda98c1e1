#pragma once

#include <stdexcept>
#include <string>

namespace ringcheck {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar-level division by zero (rational or Gaussian-rational divisor).
struct DivisionByZero : Error {
    using Error::Error;
};

// Mixing ring elements that belong to different contexts.
struct ContextMismatch : Error {
    using Error::Error;
};

// Parser failure; `position` is a byte offset into the input text.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at byte " + std::to_string(pos) + ")"), position(pos) {}
};

// A symbol that does not exist in the current ring context ("y" in a
// univariate context, "i" without Gaussian coefficients, ...).
struct UnknownSymbol : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct NegativeExponent : SyntaxError {
    using SyntaxError::SyntaxError;
};

// Ring-element division with divisor zero.
struct DivisionByZeroElement : Error {
    using Error::Error;
};

// Power-membership query against a zero or unit base.
struct InvalidBase : Error {
    using Error::Error;
};

struct UnknownSetName : Error {
    using Error::Error;
};

struct DuplicateSetName : Error {
    using Error::Error;
};

// A term name that is bound neither by a quantifier nor by the environment.
struct UnboundName : Error {
    using Error::Error;
};

// Projected fragment size exceeds the configured enumeration cap.
struct FragmentTooLarge : Error {
    using Error::Error;
};

// Bad command-line or configuration input.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace ringcheck
