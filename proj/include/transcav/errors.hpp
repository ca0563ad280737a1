// errors.hpp — error taxonomy shared by the library and the CLI exit codes

#pragma once

#include <stdexcept>
#include <string>

namespace transcav {

// Bad arguments or malformed input (config keys, out-of-range indices, ...).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A quantity left the tabulated domain (e.g. |alpha|^2 beyond the effective
// resonance table). The message states how to enlarge the table.
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A numerical routine failed outright (eigensolver breakdown, ...).
struct computation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive step size underflowed; reports t and alpha in the message.
struct stiffness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A fixed point sits on a bifurcation boundary (|det J| ~ 0); the parameter
// point should be treated as a region boundary, not classified.
struct degenerate_root_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exit-status categories for the CLI.
enum class error_category : int {
    ok = 0,
    other = 1,
    input = 2,
    range = 3,
    stiffness = 4,
    degenerate_root = 5,
    computation = 6,
};

} // namespace transcav
