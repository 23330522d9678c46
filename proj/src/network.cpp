#include "relaycap/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace relaycap {

NodeKind node_kind_from_string(const std::string& s) {
    if (s == "origin") return NodeKind::Origin;
    if (s == "destination") return NodeKind::Destination;
    if (s == "hub") return NodeKind::Hub;
    throw ConfigError("unknown node kind: " + s);
}

std::string to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Origin: return "origin";
        case NodeKind::Destination: return "destination";
        case NodeKind::Hub: return "hub";
    }
    return "?";
}

double haversine_km(double lat1, double lon1, double lat2, double lon2) {
    constexpr double kEarthRadiusKm = 6371.0;
    constexpr double kDeg = 3.14159265358979323846 / 180.0;
    const double dlat = (lat2 - lat1) * kDeg;
    const double dlon = (lon2 - lon1) * kDeg;
    const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(lat1 * kDeg) * std::cos(lat2 * kDeg) *
                         std::sin(dlon / 2) * std::sin(dlon / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

Network::Network(std::vector<Node> nodes, std::vector<Arc> arcs)
    : nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        if (!index_by_id_.emplace(n.id, static_cast<int>(i)).second)
            throw DuplicateNodeIdError(n.id);
        if (n.lat < -90.0 || n.lat > 90.0 || n.lon < -180.0 || n.lon > 180.0)
            throw ConfigError("node " + n.id + " has out-of-range position");
        switch (n.kind) {
            case NodeKind::Origin: origins_.push_back(static_cast<int>(i)); break;
            case NodeKind::Destination: destinations_.push_back(static_cast<int>(i)); break;
            case NodeKind::Hub: hubs_.push_back(static_cast<int>(i)); break;
        }
    }
    out_arcs_.assign(nodes_.size(), {});
    in_arcs_.assign(nodes_.size(), {});
    std::set<std::string> arc_ids;
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
        Arc& arc = arcs_[a];
        if (arc.tail < 0 || arc.tail >= static_cast<int>(nodes_.size()) ||
            arc.head < 0 || arc.head >= static_cast<int>(nodes_.size()) ||
            arc.tail == arc.head)
            throw ConfigError("arc " + arc.id + " has invalid endpoints");
        if (arc.base_travel_time <= 0.0)
            throw ConfigError("arc " + arc.id + " has nonpositive travel time");
        if (arc.id.empty())
            arc.id = nodes_[static_cast<std::size_t>(arc.tail)].id + "->" +
                     nodes_[static_cast<std::size_t>(arc.head)].id;
        if (!arc_ids.insert(arc.id).second)
            throw ConfigError("duplicate arc id: " + arc.id);
        out_arcs_[static_cast<std::size_t>(arc.tail)].push_back(static_cast<int>(a));
        in_arcs_[static_cast<std::size_t>(arc.head)].push_back(static_cast<int>(a));
    }
}

int Network::node_index(const std::string& id) const {
    auto it = index_by_id_.find(id);
    return it == index_by_id_.end() ? -1 : it->second;
}

int Network::node_index_checked(const std::string& id) const {
    int i = node_index(id);
    if (i < 0) throw ConfigError("unknown node id: " + id);
    return i;
}

void HubEconomics::validate(const Network& net) const {
    if (truckload < 1) throw ConfigError("truckload m must be >= 1");
    if (capacity_cap < 0) throw ConfigError("capacity cap b must be >= 0");
    for (int h : net.hubs()) {
        const std::string& id = net.node(h).id;
        auto need = [&](const std::map<std::string, double>& m, const char* what) -> double {
            auto it = m.find(id);
            if (it == m.end())
                throw ConfigError(std::string("hub economics missing ") + what + " for hub " + id);
            return it->second;
        };
        if (need(fixed_cost, "fixed_cost") < 0.0)
            throw ConfigError("fixed cost must be >= 0 for hub " + id);
        if (need(unit_capacity_cost, "unit_capacity_cost") < 0.0)
            throw ConfigError("unit capacity cost must be >= 0 for hub " + id);
        double p = need(disruption_rate, "disruption_rate");
        if (p < 0.0 || p > 1.0)
            throw ConfigError("disruption rate must lie in [0,1] for hub " + id);
    }
}

namespace {

bool direction_allowed(NodeKind tail, NodeKind head, bool relay_only) {
    if (head == NodeKind::Origin || tail == NodeKind::Destination) return false;
    if (tail == NodeKind::Origin && head == NodeKind::Destination) return !relay_only;
    return true;
}

} // namespace

Network build_network(const std::vector<Node>& nodes,
                      const std::vector<CandidateArc>& candidate_arcs,
                      const BuildOptions& opts,
                      const std::vector<std::pair<std::string, std::string>>& demand_pairs) {
    if (nodes.empty()) throw ConfigError("node list is empty");

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!index.emplace(nodes[i].id, static_cast<int>(i)).second)
            throw DuplicateNodeIdError(nodes[i].id);

    std::vector<CandidateArc> cands;
    if (opts.auto_connect) {
        if (opts.speed_kmh <= 0.0) throw ConfigError("auto_connect requires speed > 0");
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                if (i == j) continue;
                if (!direction_allowed(nodes[i].kind, nodes[j].kind, opts.relay_only)) continue;
                cands.push_back({nodes[i].id, nodes[j].id, -1.0, opts.default_fleet_cost_rate});
            }
    } else {
        cands = candidate_arcs;
        if (opts.undirected_input) {
            const std::size_t n = cands.size();
            for (std::size_t i = 0; i < n; ++i)
                cands.push_back({cands[i].head_id, cands[i].tail_id, cands[i].travel_time_hours,
                                 cands[i].fleet_cost_rate});
        }
    }

    std::vector<Arc> arcs;
    for (const CandidateArc& c : cands) {
        auto ti = index.find(c.tail_id);
        auto hi = index.find(c.head_id);
        if (ti == index.end()) throw ConfigError("arc references unknown node: " + c.tail_id);
        if (hi == index.end()) throw ConfigError("arc references unknown node: " + c.head_id);
        const Node& tail = nodes[static_cast<std::size_t>(ti->second)];
        const Node& head = nodes[static_cast<std::size_t>(hi->second)];
        if (!direction_allowed(tail.kind, head.kind, opts.relay_only)) continue;
        double t = c.travel_time_hours;
        if (t < 0.0) {
            if (opts.speed_kmh <= 0.0) throw ConfigError("computing travel times requires speed > 0");
            t = haversine_km(tail.lat, tail.lon, head.lat, head.lon) / opts.speed_kmh;
        }
        if (t <= 0.0 || t > opts.max_leg_hours) continue; // short-haul leg rule
        Arc a;
        a.tail = ti->second;
        a.head = hi->second;
        a.base_travel_time = t;
        a.fleet_cost_rate = c.fleet_cost_rate;
        arcs.push_back(a);
    }

    Network net(nodes, std::move(arcs));

    // Every demanded OD pair must admit a path (through >= 1 hub in relay mode;
    // relay mode has no direct arcs, so any path qualifies).
    for (const auto& [oid, did] : demand_pairs) {
        int o = net.node_index_checked(oid);
        int d = net.node_index_checked(did);
        std::vector<char> seen(net.nodes().size(), 0);
        std::deque<int> queue{o};
        seen[static_cast<std::size_t>(o)] = 1;
        bool found = false;
        while (!queue.empty() && !found) {
            int v = queue.front();
            queue.pop_front();
            for (int ai : net.out_arcs(v)) {
                int w = net.arc(ai).head;
                if (w == d) { found = true; break; }
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            }
        }
        if (!found) throw DisconnectedDemandPairError(oid, did);
    }
    return net;
}

double scenario_travel_time(const Arc& arc, const std::vector<char>& disrupted_node_mask,
                            double delay_multiplier) {
    const bool hit = disrupted_node_mask[static_cast<std::size_t>(arc.tail)] ||
                     disrupted_node_mask[static_cast<std::size_t>(arc.head)];
    return hit ? arc.base_travel_time * delay_multiplier : arc.base_travel_time;
}

double scenario_travel_time(const Network& net, const Arc& arc,
                            const std::vector<std::string>& disrupted_hub_ids,
                            double delay_multiplier) {
    std::vector<char> mask(net.nodes().size(), 0);
    for (const std::string& id : disrupted_hub_ids)
        mask[static_cast<std::size_t>(net.node_index_checked(id))] = 1;
    return scenario_travel_time(arc, mask, delay_multiplier);
}

std::vector<char> disruption_mask(const Network& net, const std::vector<int>& disrupted_hub_nodes) {
    std::vector<char> mask(net.nodes().size(), 0);
    for (int h : disrupted_hub_nodes) mask[static_cast<std::size_t>(h)] = 1;
    return mask;
}

} // namespace relaycap
