#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qs4 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ModeMismatch : Error {
    using Error::Error;
};

struct PoleError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

/// A rewrite rule whose left side is not the leading word of its polynomial.
struct OrderError : Error {
    using Error::Error;
};

/// Raised when a computation needs more of a truncated module or a rewrite
/// system than was built.
struct BoundError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace qs4
