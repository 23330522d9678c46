#pragma once

#include <map>
#include <string>
#include <vector>

#include "relaycap/errors.hpp"

namespace relaycap {

enum class NodeKind { Origin, Destination, Hub };

NodeKind node_kind_from_string(const std::string& s);
std::string to_string(NodeKind k);

struct Node {
    std::string id;
    NodeKind kind = NodeKind::Hub;
    double lat = 0.0; // decimal degrees, [-90, 90]
    double lon = 0.0; // decimal degrees, [-180, 180]
};

struct Arc {
    std::string id; // unique, defaults to "tail->head"
    int tail = -1;  // node index
    int head = -1;  // node index
    double base_travel_time = 0.0; // hours
    double fleet_cost_rate = 0.0;  // currency per truck-hour
};

// Raw arc as read from input files, before leg-time filtering.
struct CandidateArc {
    std::string tail_id;
    std::string head_id;
    double travel_time_hours = -1.0; // < 0 means "compute from positions"
    double fleet_cost_rate = 0.0;
};

struct BuildOptions {
    double max_leg_hours = 5.5;
    double speed_kmh = 70.0;       // used when travel times are computed from positions
    bool relay_only = true;        // drop origin->destination arcs
    bool auto_connect = false;     // generate candidate arcs between all compatible node pairs
    bool undirected_input = false; // each candidate arc also adds its reverse
    double default_fleet_cost_rate = 1.0; // for auto-connected arcs
};

// Immutable after construction; safe to share across threads.
class Network {
public:
    Network(std::vector<Node> nodes, std::vector<Arc> arcs);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    const Arc& arc(int a) const { return arcs_[static_cast<std::size_t>(a)]; }

    int node_index(const std::string& id) const; // -1 if unknown
    int node_index_checked(const std::string& id) const;

    // delta+(i) / delta-(i): arc indexes leaving / entering node i.
    const std::vector<int>& out_arcs(int node) const { return out_arcs_[static_cast<std::size_t>(node)]; }
    const std::vector<int>& in_arcs(int node) const { return in_arcs_[static_cast<std::size_t>(node)]; }

    const std::vector<int>& origins() const { return origins_; }
    const std::vector<int>& destinations() const { return destinations_; }
    const std::vector<int>& hubs() const { return hubs_; }

    bool is_hub(int node) const { return nodes_[static_cast<std::size_t>(node)].kind == NodeKind::Hub; }

private:
    std::vector<Node> nodes_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_arcs_;
    std::vector<std::vector<int>> in_arcs_;
    std::vector<int> origins_, destinations_, hubs_;
    std::map<std::string, int> index_by_id_;
};

struct HubEconomics {
    // Keyed by hub node id.
    std::map<std::string, double> fixed_cost;         // f_h >= 0, currency
    std::map<std::string, double> unit_capacity_cost; // s_h >= 0, currency per capacity-unit per day
    std::map<std::string, double> disruption_rate;    // p_h in [0, 1]
    long truckload = 1;    // m, units per truck, >= 1
    long capacity_cap = 0; // b, max deployable capacity per hub, >= 0

    void validate(const Network& net) const;
    double f(const std::string& hub) const { return fixed_cost.at(hub); }
    double s(const std::string& hub) const { return unit_capacity_cost.at(hub); }
    double p(const std::string& hub) const { return disruption_rate.at(hub); }
};

double haversine_km(double lat1, double lon1, double lat2, double lon2);

// Builds the network: filters candidate arcs by the short-haul leg rule
// (travel time <= max_leg_hours), drops direction-invalid arcs (into origins,
// out of destinations, and origin->destination when relay_only), and indexes
// adjacency. When opts.auto_connect is set, candidate_arcs is ignored and all
// compatible node pairs are generated with travel time = haversine / speed.
// demand_pairs (origin id, destination id), when given, are validated to admit
// a relay path; the first failing pair raises DisconnectedDemandPairError.
Network build_network(const std::vector<Node>& nodes,
                      const std::vector<CandidateArc>& candidate_arcs,
                      const BuildOptions& opts = {},
                      const std::vector<std::pair<std::string, std::string>>& demand_pairs = {});

// Travel time of one arc under a disruption realization: base time scaled by
// delay_multiplier when either endpoint is a disrupted hub. This is t(a, w).
double scenario_travel_time(const Arc& arc, const std::vector<char>& disrupted_node_mask,
                            double delay_multiplier);

// Convenience overload taking hub ids.
double scenario_travel_time(const Network& net, const Arc& arc,
                            const std::vector<std::string>& disrupted_hub_ids,
                            double delay_multiplier);

std::vector<char> disruption_mask(const Network& net, const std::vector<int>& disrupted_hub_nodes);

} // namespace relaycap
