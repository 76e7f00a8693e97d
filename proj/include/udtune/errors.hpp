#pragma once

#include <stdexcept>
#include <string>

namespace udtune {

// Lattice generator shares a factor with the run count n.
struct NonCoprimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A column subset of size s was requested from a table with fewer columns.
struct InsufficientColumnsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A sampled signal contains NaN or infinity.
struct NonFiniteSignalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Total thrust magnitude is zero; desired attitude is undefined.
struct ThrustDegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Desired roll would require |asin| argument beyond 1 (outside tolerance).
struct InfeasibleAttitudeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A control channel's input gain g_i is numerically zero.
struct ControlSingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every evaluated candidate diverged; the search has no ranked result.
struct NoFeasibleCandidateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace udtune
