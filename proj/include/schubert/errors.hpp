#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schubert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (containment, degree, family...).
struct PreconditionError : Error {
    using Error::Error;
};

struct InconsistentSystem : Error {
    using Error::Error;
};

struct NonUniqueSolution : Error {
    using Error::Error;
};

/// Raised when an exact computation produces a value that theory says cannot occur
/// (e.g. a non-integral coordinate in a Z-basis). Always a bug, never user error.
struct InternalError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t pos, const std::string& msg)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

} // namespace schubert
