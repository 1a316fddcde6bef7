#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace obstruct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A graph would exceed the fixed vertex capacity, or an operation was asked
/// to handle an order it does not support.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A vertex index outside [0, order).
class BoundsError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. `offset` is the byte position of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Numeric parameters outside their documented range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An operation was called on an input that violates its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A self-check failed; indicates a bug in this library.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace obstruct
