#pragma once

#include <stdexcept>
#include <string>

namespace holseries {

// Bad argument values. CLI maps this to exit code 2.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters outside a mathematically supported regime. CLI exit code 3.
struct unsupported_regime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent routes to the same quantity disagreed.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace holseries
