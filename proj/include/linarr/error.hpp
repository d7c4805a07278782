#pragma once

#include <stdexcept>
#include <string>

namespace linarr {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid arithmetic request: division by zero, conductor overflow,
/// degree mismatch, non-exact division.
struct MathError : Error {
    using Error::Error;
};

/// Malformed input text. Carries a 1-based line and column when known
/// (0 = unknown).
struct ParseError : Error {
    std::size_t line = 0;
    std::size_t column = 0;
    ParseError(const std::string& msg, std::size_t line_ = 0, std::size_t col_ = 0)
        : Error(format(msg, line_, col_)), line(line_), column(col_) {}

private:
    static std::string format(const std::string& msg, std::size_t line, std::size_t col) {
        std::string s = "parse error";
        if (line) s += " at line " + std::to_string(line);
        if (col) s += ", column " + std::to_string(col);
        return s + ": " + msg;
    }
};

/// A computation could not be carried out under the configured limits
/// (oracle budget, genericity retries, kernel-dimension anomalies).
struct ComputationError : Error {
    using Error::Error;
};

/// An internal invariant failed. Indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace linarr
