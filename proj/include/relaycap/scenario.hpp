#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relaycap/errors.hpp"
#include "relaycap/rng.hpp"

namespace relaycap {

// (origin id, destination id)
using OdPair = std::pair<std::string, std::string>;
using DemandMap = std::map<OdPair, long>;

struct DemandRecord {
    int day = 0; // day index within the observed horizon (0-based)
    std::string origin;
    std::string destination;
    long quantity = 0;
};

struct DemandHistory {
    std::vector<DemandRecord> records;
    // 0 means "infer from the day span of the records".
    int horizon_days = 0;
};

// Univariate Gaussian-kernel density estimator over daily totals.
struct Kde {
    std::vector<double> samples; // sorted
    double bandwidth = 0.0;

    // Resample a data point and perturb it with kernel noise.
    double draw(Rng& rng) const;
    double quantile(double q) const; // linear interpolation between order statistics
    double mean() const;
};

struct DemandEstimator {
    std::map<OdPair, Kde> by_pair;
    int horizon_days = 0;
};

enum class StressLevel {
    L1_deterministic = 1,
    L2_stochastic_demand = 2,
    L3_stochastic_disruption = 3,
    L4_integrated = 4,
};

StressLevel stress_level_from_int(int level);
std::string to_string(StressLevel level);

struct Scenario {
    DemandMap demand;                        // q_od(w), nonnegative integers
    std::vector<std::string> disrupted_hubs; // sorted hub ids
    double weight = 1.0;
};

struct ScenarioSet {
    std::vector<Scenario> scenarios;
    StressLevel level = StressLevel::L1_deterministic;
};

struct HubEconomics; // network.hpp

// One Gaussian KDE per OD pair over its daily totals; days without a record
// for an observed pair count as zero-valued sample points. Bandwidth is
// Silverman's rule 0.9 * min(sd, IQR/1.34) * n^(-1/5), floored at 1e-3.
DemandEstimator fit_demand_estimator(const DemandHistory& history);

// n demand maps; each value is drawn from the pair's KDE, truncated at 0 and
// rounded half-up to an integer. Identical seeds give identical output.
std::vector<DemandMap> sample_demand_scenarios(const DemandEstimator& estimator, int n,
                                               std::uint64_t seed);

// n disrupted-hub sets; hub h is included independently with probability p_h.
std::vector<std::vector<std::string>> sample_disruption_scenarios(
    const HubEconomics& econ, const std::vector<std::string>& hubs, int n, std::uint64_t seed);

// Per-pair empirical quantile of daily demand, rounded half-up.
DemandMap quantile_demand(const DemandEstimator& estimator, double q);

// Assembles the scenario set for one stress-testing level:
//   L1: n copies of the quantile demand, no disruptions
//   L2: n sampled demands, no disruptions
//   L3: quantile demand, n sampled disruption sets
//   L4: n sampled demands paired 1:1 with n sampled disruption sets
// All weights are 1/n. Demand draws use seed streams child(seed, i) and
// disruption draws child(seed, n + i), so L2/L4 (and L3/L4) share draws
// under a common seed.
ScenarioSet build_stress_scenarios(StressLevel level, const DemandEstimator& estimator,
                                   const HubEconomics& econ,
                                   const std::vector<std::string>& hubs, int n,
                                   double demand_quantile, std::uint64_t seed);

std::string scenario_set_to_json(const ScenarioSet& set);
ScenarioSet scenario_set_from_json(const std::string& text);

} // namespace relaycap
