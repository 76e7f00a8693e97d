#pragma once

#include <string>
#include <vector>

#include "udtune/gabaseline.hpp"
#include "udtune/odesim.hpp"
#include "udtune/perfindex.hpp"
#include "udtune/plant_model.hpp"
#include "udtune/udsearch.hpp"

namespace udtune {

// One experiment, loaded from a JSON config file.  Schema (defaults in
// parentheses):
//   plant: "helicopter3dof" | "quadrotor"            required
//   plant_params: object of parameter overrides       ({})
//   ranges: [{name, min, max}, ...]                   (plant gain slots)
//   n: level/experiment count                         (301)
//   criterion: "ise" | "iae" | "itae" | "overshoot"  ("itae")
//   weights: per-channel nonnegative reals            (all 1)
//   sim: {dt, horizon, state_bound}                   (0.01, per-plant, 1000)
//   budget: column-selection subset budget            (100000)
//   workers: evaluation threads, 0 = auto             (0)
//   out: output directory                             ("out")
//   gains: fixed gain vector -> verification run      (absent)
//   ga: {population, generations, kc1, kc2, km1, km2, seed}
struct ExperimentConfig {
    std::string plant_key;
    PlantModel plant;
    std::vector<ParamRange> ranges;
    int n = 301;
    Criterion criterion = Criterion::itae;
    std::vector<double> weights;
    SimConfig sim;
    long long budget = 100000;
    unsigned workers = 0;
    std::string out_dir = "out";
    std::vector<double> fixed_gains;  // non-empty selects a verification run
    GaConfig ga;
    std::vector<std::string> warnings;  // unrecognized keys noted by the loader

    std::vector<std::string> gain_names() const;
};

ExperimentConfig load_experiment_config(const std::string& path);

// Registry lookup used by the config loader; throws invalid-argument for an
// unknown key.
PlantModel make_plant(const std::string& key);

}  // namespace udtune
