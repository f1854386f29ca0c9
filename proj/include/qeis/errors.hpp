#pragma once

#include <stdexcept>
#include <string>

namespace qeis {

// Bad input: maps to exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two independent computations disagree, or an exactness assertion failed: exit code 3.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Enumeration or work budget exceeded: exit code 4.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature did not converge.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qeis
