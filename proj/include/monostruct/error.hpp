#pragma once

#include <stdexcept>
#include <string>

namespace mono {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (structure files, formulas, definition files).
/// `line()` is 1-based, or 0 when the input has no line structure.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A well-formed request that violates an operation's precondition or a
/// configured cap (size limits, signature mismatch, empty subsets, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace mono
