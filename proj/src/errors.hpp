#pragma once

#include <stdexcept>
#include <string>

namespace qpair {

// Bad input (malformed files, dependent bases, invalid parameters).
// CLI maps this to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure (a verified invariant did not hold).
// CLI maps this to exit code 2.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an element of a quotient ring has no inverse.  Callers that
// compute over quotient rings catch this and fall back to dims-only output.
class not_invertible : public std::runtime_error {
public:
    explicit not_invertible(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpair
