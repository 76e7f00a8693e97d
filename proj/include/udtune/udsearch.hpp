#pragma once

#include <functional>
#include <string>
#include <vector>

#include "udtune/discrepancy.hpp"
#include "udtune/lattice.hpp"
#include "udtune/odesim.hpp"
#include "udtune/perfindex.hpp"
#include "udtune/plant_model.hpp"

namespace udtune {

struct ParamRange {
    std::string name;
    double min_value = 0.0;
    double max_value = 1.0;
};

// Common level grid over every parameter: the user fixes one n, and each
// parameter gets n evenly spaced levels from min to max.
struct ParameterSpace {
    std::vector<ParamRange> ranges;
    int n = 0;

    int s() const { return static_cast<int>(ranges.size()); }
    double lambda(int i) const;
    // Level j in 1..n of parameter i; endpoints are exact.
    double level(int i, int j) const;
};

ParameterSpace build_space(const std::vector<ParamRange>& ranges, int n);

// gains[i] = level(i, M(row, i)) with M the table restricted to the selected
// columns; row is 0-based.
std::vector<double> map_row(const ParameterSpace& space,
                            const DesignTable& table,
                            const ColumnSelection& selection, int row);

// Outcome of evaluating one gain vector.
struct RowEval {
    IndexReport report;
    bool diverged = false;
};

// Pluggable row objective; must be pure and thread-safe.
using RowObjective = std::function<RowEval(const std::vector<double>&)>;

struct SearchRow {
    std::vector<double> gains;
    IndexReport report;
    bool diverged = false;
    // aggregate with the +inf sentinel applied for diverged rows
    double ranked_aggregate = 0.0;
};

struct SearchReport {
    int n = 0;
    ColumnSelection selection;
    std::string criterion;
    std::vector<SearchRow> rows;
    int best_index = -1;
    // evaluation-phase wall clock, seconds; reported on stdout only, never
    // serialized, so output files stay byte-reproducible
    double wall_time = 0.0;
};

const SearchRow& best_row(const SearchReport& report);

// Builds the table and use-table, maps every row to gains, evaluates all
// rows through the objective (in parallel), and ranks by the +inf-sentinel
// aggregate with row index as the tie break.
SearchReport run_search_objective(const ParameterSpace& space,
                                  const RowObjective& objective,
                                  long long budget = 100000,
                                  unsigned workers = 0);

// Simulation-backed search: each row is one closed-loop run scored by the
// chosen criterion over the plant's error channels.  Overshoot diagnostics
// are computed per channel against the final reference value.
SearchReport run_search(const PlantModel& plant, const ParameterSpace& space,
                        const SimConfig& cfg,
                        Criterion criterion = Criterion::itae,
                        const std::vector<double>& weights = {},
                        long long budget = 100000, unsigned workers = 0);

// The row objective used by run_search, exposed so single gain vectors can
// be scored the same way (verification runs).
RowObjective make_simulation_objective(const PlantModel& plant,
                                       const SimConfig& cfg,
                                       Criterion criterion,
                                       const std::vector<double>& weights);

// Percent overshoot of each error channel: peak excursion of the output
// beyond the final reference value, relative to it.  Channels whose final
// reference magnitude is below 1e-12 report 0.
std::vector<double> channel_overshoots(const Trajectory& traj);

std::string search_report_to_json(const SearchReport& report,
                                  const std::vector<std::string>& gain_names);
std::string search_report_to_csv(const SearchReport& report,
                                 const std::vector<std::string>& gain_names);

}  // namespace udtune
