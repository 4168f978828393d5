#pragma once

#include <stdexcept>

namespace zeno {

// Non-finite or out-of-range argument to a library entry point.
struct invalid_parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Qubit index out of range, or a CNOT whose control equals its target.
struct index_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Requested register or sweep exceeds the engine's amplitude budget.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// Malformed input text (angle expressions, ranges).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zeno
