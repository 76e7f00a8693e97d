#pragma once

#include <functional>
#include <string>
#include <vector>

namespace udtune {

struct GainSlot {
    std::string name;
    double min_value = 0.0;
    double max_value = 1.0;
};

// A per-simulation controller: called once per step with (t, state), returns
// the control vector.  Any internal state (integrals, filters) lives in the
// closure, so each simulation gets a fresh instance.
using Controller =
    std::function<std::vector<double>(double, const std::vector<double>&)>;

// Simulable closed loop.  Instances are immutable after construction; all
// closures must be re-entrant.
struct PlantModel {
    std::string name;
    int state_dim = 0;
    std::vector<GainSlot> gain_slots;
    std::vector<std::string> state_names;
    std::vector<std::string> control_names;
    std::vector<std::string> error_names;   // tracked error channels
    std::vector<double> initial_state;

    // dynamics(t, state, control) -> state derivative
    std::function<std::vector<double>(double, const std::vector<double>&,
                                      const std::vector<double>&)>
        dynamics;

    // Builds a fresh controller for one simulation from a gain vector.
    std::function<Controller(const std::vector<double>&)> make_controller;

    // references(t) -> one reference value per error channel
    std::function<std::vector<double>(double)> references;

    // errors(t, state, references) -> one error value per channel
    std::function<std::vector<double>(double, const std::vector<double>&,
                                      const std::vector<double>&)>
        errors;

    // Optional post-step state normalization (e.g. a mechanical stop).
    // Returns true when it altered the state.
    std::function<bool(std::vector<double>&)> clamp_state;
};

}  // namespace udtune
