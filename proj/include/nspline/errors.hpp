#pragma once

#include <stdexcept>
#include <string>

namespace nspline {

// Bad user input: malformed files, invalid parameter combinations.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical breakdown: divergence, non-finite values mid-computation.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation not defined for the given configuration (e.g. reflecting a
// fractional-order activation).
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nspline
