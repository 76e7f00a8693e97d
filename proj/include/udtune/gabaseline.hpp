#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "udtune/odesim.hpp"
#include "udtune/perfindex.hpp"
#include "udtune/plant_model.hpp"
#include "udtune/udsearch.hpp"

namespace udtune {

struct GaConfig {
    int population = 40;     // must be even and >= 2
    int generations = 100;
    double kc1 = 1.0;        // adaptive crossover coefficients, in (0, 1]
    double kc2 = 0.5;
    double km1 = 0.5;        // adaptive mutation coefficients, in (0, 1]
    double km2 = 0.05;
    std::uint64_t seed = 1;
};

struct GaGeneration {
    double best = 0.0;         // best aggregate in the population (elitist,
                               // non-increasing across generations)
    double mean_finite = 0.0;  // mean aggregate over non-diverged individuals
    int diverged = 0;
};

struct GaReport {
    std::vector<double> best_gains;
    double best_aggregate = 0.0;
    std::vector<GaGeneration> generations;
    // evaluation-phase wall clock, seconds; stdout only, never serialized
    double wall_time = 0.0;
};

// Fitness transform used for selection and the adaptive probabilities.
inline double ga_fitness(double aggregate) { return 1.0 / (1.0 + aggregate); }

// Real-coded adaptive GA: tournament selection (size 2), arithmetic
// crossover with one blend factor per pair, Gaussian mutation with sigma at
// 5% of each range, adaptive pc/pm from the population fitness spread, one
// elite preserved per generation.  The random stream is consumed in a fixed
// sequential order, so a seed fully determines the run regardless of how
// evaluations are scheduled.
GaReport run_ga_objective(const std::vector<ParamRange>& box,
                          const RowObjective& objective, const GaConfig& cfg,
                          unsigned workers = 0);

GaReport run_ga(const PlantModel& plant, const std::vector<ParamRange>& box,
                const SimConfig& sim, Criterion criterion,
                const std::vector<double>& weights, const GaConfig& cfg,
                unsigned workers = 0);

std::string ga_report_to_json(const GaReport& report,
                              const std::vector<std::string>& gain_names,
                              const GaConfig& cfg);
std::string ga_curve_to_csv(const GaReport& report);

}  // namespace udtune
