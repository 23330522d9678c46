#include "relaycap/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "relaycap/network.hpp"

namespace relaycap {

namespace {

constexpr double kBandwidthFloor = 1e-3;

double round_half_up(double x) { return std::floor(x + 0.5); }

double sample_sd(const std::vector<double>& x) {
    if (x.size() < 2) return 0.0;
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

double interp_quantile(const std::vector<double>& sorted, double q) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = q * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= n) return sorted[n - 1];
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

double silverman_bandwidth(const std::vector<double>& sorted) {
    const double sd = sample_sd(sorted);
    const double iqr = interp_quantile(sorted, 0.75) - interp_quantile(sorted, 0.25);
    double spread = sd;
    if (iqr > 0.0) spread = std::min(sd, iqr / 1.34);
    const double n = static_cast<double>(sorted.size());
    const double bw = 0.9 * spread * std::pow(n, -0.2);
    return std::max(bw, kBandwidthFloor);
}

} // namespace

double Kde::draw(Rng& rng) const {
    const std::size_t i = static_cast<std::size_t>(rng.next_below(samples.size()));
    return samples[i] + rng.normal(0.0, bandwidth);
}

double Kde::quantile(double q) const { return interp_quantile(samples, q); }

double Kde::mean() const {
    return std::accumulate(samples.begin(), samples.end(), 0.0) /
           static_cast<double>(samples.size());
}

StressLevel stress_level_from_int(int level) {
    switch (level) {
        case 1: return StressLevel::L1_deterministic;
        case 2: return StressLevel::L2_stochastic_demand;
        case 3: return StressLevel::L3_stochastic_disruption;
        case 4: return StressLevel::L4_integrated;
    }
    throw ConfigError("stress level must be 1..4, got " + std::to_string(level));
}

std::string to_string(StressLevel level) {
    switch (level) {
        case StressLevel::L1_deterministic: return "L1";
        case StressLevel::L2_stochastic_demand: return "L2";
        case StressLevel::L3_stochastic_disruption: return "L3";
        case StressLevel::L4_integrated: return "L4";
    }
    return "?";
}

DemandEstimator fit_demand_estimator(const DemandHistory& history) {
    if (history.records.empty()) throw EmptyHistoryError();

    int min_day = history.records.front().day;
    int max_day = min_day;
    for (const DemandRecord& r : history.records) {
        if (r.quantity < 0)
            throw ConfigError("negative demand quantity for " + r.origin + " -> " + r.destination);
        min_day = std::min(min_day, r.day);
        max_day = std::max(max_day, r.day);
    }
    int horizon = history.horizon_days > 0 ? history.horizon_days : max_day - min_day + 1;

    // Daily totals per pair, then zero-fill the unobserved days.
    std::map<OdPair, std::map<int, double>> daily;
    for (const DemandRecord& r : history.records) {
        if (r.day - min_day >= horizon)
            throw ConfigError("record day outside the stated horizon for " + r.origin + " -> " +
                              r.destination);
        daily[{r.origin, r.destination}][r.day - min_day] += static_cast<double>(r.quantity);
    }

    DemandEstimator est;
    est.horizon_days = horizon;
    for (auto& [pair, by_day] : daily) {
        Kde kde;
        kde.samples.reserve(static_cast<std::size_t>(horizon));
        for (int d = 0; d < horizon; ++d) {
            auto it = by_day.find(d);
            kde.samples.push_back(it == by_day.end() ? 0.0 : it->second);
        }
        std::sort(kde.samples.begin(), kde.samples.end());
        kde.bandwidth = silverman_bandwidth(kde.samples);
        est.by_pair.emplace(pair, std::move(kde));
    }
    return est;
}

std::vector<DemandMap> sample_demand_scenarios(const DemandEstimator& estimator, int n,
                                               std::uint64_t seed) {
    if (n < 1) throw ConfigError("scenario count must be >= 1");
    std::vector<DemandMap> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rng rng(Rng::child_seed(seed, static_cast<std::uint64_t>(i)));
        DemandMap demand;
        for (const auto& [pair, kde] : estimator.by_pair) {
            const double raw = kde.draw(rng);
            demand[pair] = static_cast<long>(round_half_up(std::max(0.0, raw)));
        }
        out.push_back(std::move(demand));
    }
    return out;
}

std::vector<std::vector<std::string>> sample_disruption_scenarios(
    const HubEconomics& econ, const std::vector<std::string>& hubs, int n, std::uint64_t seed) {
    if (n < 1) throw ConfigError("scenario count must be >= 1");
    std::vector<std::string> sorted_hubs = hubs;
    std::sort(sorted_hubs.begin(), sorted_hubs.end());
    std::vector<std::vector<std::string>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rng rng(Rng::child_seed(seed, static_cast<std::uint64_t>(i)));
        std::vector<std::string> down;
        for (const std::string& h : sorted_hubs)
            if (rng.bernoulli(econ.p(h))) down.push_back(h);
        out.push_back(std::move(down));
    }
    return out;
}

DemandMap quantile_demand(const DemandEstimator& estimator, double q) {
    if (q <= 0.0 || q >= 1.0) throw ConfigError("demand quantile must lie in (0,1)");
    DemandMap demand;
    for (const auto& [pair, kde] : estimator.by_pair)
        demand[pair] = static_cast<long>(round_half_up(std::max(0.0, kde.quantile(q))));
    return demand;
}

ScenarioSet build_stress_scenarios(StressLevel level, const DemandEstimator& estimator,
                                   const HubEconomics& econ,
                                   const std::vector<std::string>& hubs, int n,
                                   double demand_quantile, std::uint64_t seed) {
    if (n < 1) throw ConfigError("scenario count must be >= 1");
    const bool stochastic_demand = level == StressLevel::L2_stochastic_demand ||
                                   level == StressLevel::L4_integrated;
    const bool stochastic_disruption = level == StressLevel::L3_stochastic_disruption ||
                                       level == StressLevel::L4_integrated;

    std::vector<DemandMap> demands;
    if (stochastic_demand) {
        demands = sample_demand_scenarios(estimator, n, seed);
    } else {
        demands.assign(static_cast<std::size_t>(n), quantile_demand(estimator, demand_quantile));
    }
    std::vector<std::vector<std::string>> disruptions(static_cast<std::size_t>(n));
    if (stochastic_disruption)
        disruptions = sample_disruption_scenarios(
            econ, hubs, n, Rng::child_seed(seed, static_cast<std::uint64_t>(n)));

    ScenarioSet set;
    set.level = level;
    const double w = 1.0 / static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        Scenario s;
        s.demand = std::move(demands[static_cast<std::size_t>(i)]);
        s.disrupted_hubs = std::move(disruptions[static_cast<std::size_t>(i)]);
        s.weight = w;
        set.scenarios.push_back(std::move(s));
    }
    return set;
}

std::string scenario_set_to_json(const ScenarioSet& set) {
    nlohmann::json root;
    root["level"] = static_cast<int>(set.level);
    nlohmann::json arr = nlohmann::json::array();
    for (const Scenario& s : set.scenarios) {
        nlohmann::json js;
        nlohmann::json demand = nlohmann::json::object();
        for (const auto& [pair, q] : s.demand) demand[pair.first + "->" + pair.second] = q;
        js["demand"] = std::move(demand);
        js["disrupted_hubs"] = s.disrupted_hubs;
        js["weight"] = s.weight;
        arr.push_back(std::move(js));
    }
    root["scenarios"] = std::move(arr);
    return root.dump(2) + "\n";
}

ScenarioSet scenario_set_from_json(const std::string& text) {
    nlohmann::json root = nlohmann::json::parse(text);
    ScenarioSet set;
    if (root.contains("level")) set.level = stress_level_from_int(root["level"].get<int>());
    for (const auto& js : root.at("scenarios")) {
        Scenario s;
        for (const auto& [key, value] : js.at("demand").items()) {
            const std::size_t sep = key.find("->");
            if (sep == std::string::npos)
                throw ConfigError("bad demand key (expected 'origin->destination'): " + key);
            long q = value.get<long>();
            if (q < 0) throw ConfigError("negative demand in scenario file for " + key);
            s.demand[{key.substr(0, sep), key.substr(sep + 2)}] = q;
        }
        s.disrupted_hubs = js.at("disrupted_hubs").get<std::vector<std::string>>();
        std::sort(s.disrupted_hubs.begin(), s.disrupted_hubs.end());
        s.weight = js.at("weight").get<double>();
        set.scenarios.push_back(std::move(s));
    }
    if (set.scenarios.empty()) throw ConfigError("scenario file contains no scenarios");
    return set;
}

} // namespace relaycap
