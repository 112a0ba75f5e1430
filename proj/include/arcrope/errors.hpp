#pragma once

#include <stdexcept>
#include <string>

namespace arcrope {

/// Raised when input data violates a structural invariant (bad presentation,
/// unrecognized curve structure, out-of-range parameter). The machine-readable
/// code identifies the specific failure; see the per-module documentation.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Raised for malformed file contents. line() is 1-based; 0 means "whole file".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace arcrope
