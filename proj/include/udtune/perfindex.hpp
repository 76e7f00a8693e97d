#pragma once

#include <string>
#include <utility>
#include <vector>

namespace udtune {

// Uniformly sampled signal, sample k taken at t_k = k * dt.
struct SampledSignal {
    double dt = 0.0;
    std::vector<double> values;
};

enum class Criterion { ise, iae, itae, overshoot };

Criterion parse_criterion(const std::string& name);
std::string criterion_name(Criterion c);

// Per-channel indices; overshoot_pct is a diagnostic supplied by the caller,
// which owns the reference signals.
struct ChannelIndices {
    std::string name;
    double ise = 0.0;
    double iae = 0.0;
    double itae = 0.0;
    double overshoot_pct = 0.0;
};

struct IndexReport {
    double ise = 0.0;        // weighted sums over channels
    double iae = 0.0;
    double itae = 0.0;
    std::vector<ChannelIndices> per_channel;
    double aggregate = 0.0;  // weighted sum of the ranking criterion
};

// Trapezoidal integrals over the sampled horizon.
double ise(const SampledSignal& e);
double iae(const SampledSignal& e);
double itae(const SampledSignal& e);

// Weighted multi-channel report.  Empty weights mean all ones.  Ranking by
// overshoot requires per-channel overshoot values in `overshoots`; for the
// other criteria `overshoots` is an optional diagnostic column.
IndexReport aggregate(
    const std::vector<std::pair<std::string, SampledSignal>>& channels,
    const std::vector<double>& weights, Criterion criterion = Criterion::itae,
    const std::vector<double>& overshoots = {});

std::string index_report_to_json(const IndexReport& r);
std::string index_report_csv_header(const IndexReport& r);
std::string index_report_csv_row(const IndexReport& r);

}  // namespace udtune
