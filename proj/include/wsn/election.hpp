#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wsn/clustering.hpp"
#include "wsn/config.hpp"
#include "wsn/node.hpp"
#include "wsn/valuation.hpp"

namespace wsn {

// node id -> valuation score; the domain is exactly the alive nodes that
// went through the current round's partition.
using ValueTable = std::map<int, double>;

struct ClusterRoles {
    int ch = -1;  // always set for a non-empty cluster
    std::optional<int> chsec{};
    std::optional<int> chv{};
    std::optional<int> chsecv{};
};

struct RoleTable {
    std::vector<ClusterRoles> clusters;

    bool empty() const { return clusters.empty(); }

    // Only the head role feeds the next round's score penalty; vice and
    // secondary duty does not count against a node.
    bool is_ch(int node_id) const {
        for (const ClusterRoles& c : clusters) {
            if (c.ch == node_id) return true;
        }
        return false;
    }
};

inline ValueTable build_value_table(const std::vector<NodeRecord>& nodes,
                                    const ClusterAssignment& assignment,
                                    const Position& bs, double area_width,
                                    double area_height, const RoleTable& prev_roles) {
    ValueTable values;
    std::vector<Position> member_pos;
    for (const std::vector<int>& members : assignment.members) {
        member_pos.clear();
        for (int id : members) member_pos.push_back(nodes[id].pos);
        for (int id : members) {
            const NodeRecord& n = nodes[id];
            ValuationInputs in;
            in.r_frac = n.residual_energy / n.initial_energy;
            in.d_frac = normalize_bs_distance(n.pos, bs, area_width, area_height);
            in.centrality = classify_centrality(n.pos, member_pos);
            in.was_ch_prev = prev_roles.is_ch(id);
            values[id] = node_value(in).score;
        }
    }
    return values;
}

// Rank the cluster by (score desc, residual energy desc, id asc) and hand
// out the four leadership roles top-down. Clusters smaller than four fill
// what they can; the head role always exists.
inline ClusterRoles elect_roles(const std::vector<int>& cluster_members,
                                const ValueTable& values,
                                const std::vector<NodeRecord>& nodes) {
    if (cluster_members.empty()) {
        throw std::domain_error("elect_roles: empty cluster");
    }
    std::vector<int> order = cluster_members;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double va = values.at(a);
        const double vb = values.at(b);
        if (va != vb) return va > vb;
        const double ra = nodes[a].residual_energy;
        const double rb = nodes[b].residual_energy;
        if (ra != rb) return ra > rb;
        return a < b;
    });
    ClusterRoles roles;
    roles.ch = order[0];
    if (order.size() > 1) roles.chsec = order[1];
    if (order.size() > 2) roles.chv = order[2];
    if (order.size() > 3) roles.chsecv = order[3];
    return roles;
}

struct RoundConfiguration {
    ClusterAssignment assignment;
    ValueTable values;
    RoleTable roles;
};

// The per-round pipeline the base station runs on the collected status
// reports: partition the alive nodes, score them, elect per-cluster roles.
inline RoundConfiguration configure_round(const std::vector<NodeRecord>& nodes,
                                          const SimConfig& cfg,
                                          const RoleTable& prev_roles, Rng& rng) {
    RoundConfiguration out;
    out.assignment = partition(nodes, cfg.k_clusters, rng);
    out.values = build_value_table(nodes, out.assignment, cfg.bs_pos, cfg.area_width,
                                   cfg.area_height, prev_roles);
    out.roles.clusters.reserve(out.assignment.size());
    for (const std::vector<int>& members : out.assignment.members) {
        out.roles.clusters.push_back(elect_roles(members, out.values, nodes));
    }
    return out;
}

// Stamp the elected configuration onto the node records.
inline void apply_roles(std::vector<NodeRecord>& nodes, const ClusterAssignment& assignment,
                        const RoleTable& roles) {
    for (NodeRecord& n : nodes) {
        if (n.alive) {
            n.role = Role::Normal;
            n.cluster_id.reset();
        }
    }
    for (std::size_t c = 0; c < assignment.members.size(); ++c) {
        for (int id : assignment.members[c]) {
            nodes[id].cluster_id = static_cast<int>(c);
        }
        const ClusterRoles& rc = roles.clusters[c];
        nodes[rc.ch].role = Role::Ch;
        if (rc.chsec) nodes[*rc.chsec].role = Role::ChSec;
        if (rc.chv) nodes[*rc.chv].role = Role::ChVice;
        if (rc.chsecv) nodes[*rc.chsecv].role = Role::ChSecVice;
    }
}

}  // namespace wsn
