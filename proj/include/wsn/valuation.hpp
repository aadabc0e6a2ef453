#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "wsn/geometry.hpp"

namespace wsn {

enum class Centrality { Center, Side };

inline const char* to_string(Centrality c) {
    return c == Centrality::Center ? "Center" : "Side";
}

struct ValuationInputs {
    double r_frac = 0.0;  // residual / initial energy, in [0, 1]
    double d_frac = 0.0;  // normalized distance to the base station, in [0, 1]
    Centrality centrality = Centrality::Side;
    bool was_ch_prev = false;
};

struct NodeValue {
    double score = 0.0;
};

// Crisp membership bins. Brackets are half-open so a continuous input lands
// in exactly one level.

inline double energy_level(double r_frac) {
    if (!(r_frac >= 0.0 && r_frac <= 1.0)) {
        throw std::domain_error("energy_level: r_frac outside [0, 1]");
    }
    if (r_frac < 0.40) return 0.2;
    if (r_frac < 0.70) return 0.4;
    return 0.6;
}

// Nodes close to the base station score highest: they can uplink cheaply.
inline double distance_level(double d_frac) {
    if (!(d_frac >= 0.0 && d_frac <= 1.0)) {
        throw std::domain_error("distance_level: d_frac outside [0, 1]");
    }
    if (d_frac < 1.0 / 3.0) return 0.2;
    if (d_frac < 2.0 / 3.0) return 0.1;
    return 0.0;
}

inline double centrality_level(Centrality c) {
    return c == Centrality::Center ? 0.2 : 0.1;
}

// Having led a cluster last round halves the score this round, which is
// what rotates leadership duty away from recent cluster heads.
inline double prev_ch_multiplier(bool was_ch_prev) {
    return was_ch_prev ? 0.5 : 1.0;
}

inline NodeValue node_value(const ValuationInputs& in) {
    const double sum = energy_level(in.r_frac) + distance_level(in.d_frac) +
                       centrality_level(in.centrality);
    return NodeValue{sum * prev_ch_multiplier(in.was_ch_prev)};
}

// The normalization referent is the farthest field corner from the base
// station, so d_frac spans [0, 1] over the whole field even when the BS
// sits on the field edge or outside the field.
inline double normalize_bs_distance(const Position& pos, const Position& bs,
                                    double area_width, double area_height) {
    const Position corners[4] = {
        {0.0, 0.0}, {area_width, 0.0}, {0.0, area_height}, {area_width, area_height}};
    double max_d = 0.0;
    for (const Position& c : corners) {
        max_d = std::max(max_d, distance(bs, c));
    }
    if (max_d <= 0.0) {
        throw std::domain_error("normalize_bs_distance: degenerate field");
    }
    return distance(pos, bs) / max_d;
}

// Center = within half of the cluster's maximum member distance from the
// member centroid. A singleton cluster is its own center.
inline Centrality classify_centrality(const Position& pos,
                                      const std::vector<Position>& cluster_members) {
    if (cluster_members.empty()) {
        throw std::domain_error("classify_centrality: empty cluster");
    }
    Position centroid{};
    for (const Position& p : cluster_members) {
        centroid.x += p.x;
        centroid.y += p.y;
    }
    centroid.x /= static_cast<double>(cluster_members.size());
    centroid.y /= static_cast<double>(cluster_members.size());
    double max_r = 0.0;
    for (const Position& p : cluster_members) {
        max_r = std::max(max_r, distance(p, centroid));
    }
    return distance(pos, centroid) <= 0.5 * max_r ? Centrality::Center : Centrality::Side;
}

}  // namespace wsn
