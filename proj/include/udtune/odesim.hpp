#pragma once

#include <functional>
#include <string>
#include <vector>

#include "udtune/plant_model.hpp"

namespace udtune {

struct SimConfig {
    double dt = 0.01;
    double horizon = 20.0;
    double state_bound = 1000.0;  // divergence threshold on the sup-norm
};

struct Trajectory {
    double dt = 0.0;
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<std::vector<double>> controls;
    std::vector<std::vector<double>> references;
    std::vector<std::vector<double>> errors;
    bool diverged = false;
    double divergence_time = 0.0;  // meaningful only when diverged
    int saturation_events = 0;     // post-step clamps applied by the plant

    // column names copied from the plant for CSV output
    std::vector<std::string> state_names;
    std::vector<std::string> control_names;
    std::vector<std::string> error_names;

    std::size_t samples() const { return times.size(); }
};

using VectorField =
    std::function<std::vector<double>(double, const std::vector<double>&)>;

// Classical 4th-order Runge-Kutta update.  A non-finite derivative
// propagates into the returned state; the caller detects it there.
std::vector<double> rk4_step(const VectorField& f, double t,
                             const std::vector<double>& x, double dt);

// Integrates the closed loop from the plant's initial state.  The control is
// computed once per step from the current state and held constant through
// the RK4 substeps.  Stops early (diverged) on a non-finite value, a state
// component beyond cfg.state_bound, or a controller error.
Trajectory simulate(const PlantModel& plant, const std::vector<double>& gains,
                    const SimConfig& cfg);

// CSV with columns time, state_*, control_*, ref_*, err_*.
std::string trajectory_to_csv(const Trajectory& traj);

}  // namespace udtune
