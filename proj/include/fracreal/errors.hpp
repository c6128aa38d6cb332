#pragma once

#include <stdexcept>
#include <string>

namespace fracreal {

/// Raised when an input violates a documented precondition or parameter range.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when the mathematics itself degenerates: a zero divisor, an
/// inconsistent linear system, a series with no inverse, and so on.
class MathError : public std::domain_error {
public:
    explicit MathError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace fracreal
