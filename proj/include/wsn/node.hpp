#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "wsn/geometry.hpp"

namespace wsn {

// Role a node holds inside its cluster for one round. Within a cluster each
// leadership role is held by at most one node per round; a dead node is
// always Normal.
enum class Role { Normal, Ch, ChVice, ChSec, ChSecVice };

inline const char* to_string(Role r) {
    switch (r) {
        case Role::Ch: return "CH";
        case Role::ChVice: return "CHv";
        case Role::ChSec: return "CHsec";
        case Role::ChSecVice: return "CHsecv";
        case Role::Normal: return "Normal";
    }
    return "?";
}

// Node state vectors are indexed by id: nodes[i].id == i. deploy() creates
// them that way and the engines preserve it.
struct NodeRecord {
    int id = 0;
    Position pos{};
    double initial_energy = 0.0;
    double residual_energy = 0.0;
    bool alive = true;
    Role role = Role::Normal;
    std::optional<int> cluster_id{};
    bool was_ch_prev_round = false;
};

// Charge `cost` joules against the battery. The battery supplies at most
// what it holds, so a node finishes the action that kills it and then
// leaves the network: residual pinned to zero, role and cluster cleared.
// Charging a node that is already dead is a caller bug, not a model state.
inline NodeRecord deduct(NodeRecord node, double cost) {
    if (!node.alive) {
        throw std::logic_error("dead-node-charge: node " + std::to_string(node.id));
    }
    if (cost < 0.0) {
        throw std::domain_error("deduct: negative cost");
    }
    if (cost >= node.residual_energy) {
        node.residual_energy = 0.0;
        node.alive = false;
        node.role = Role::Normal;
        node.cluster_id.reset();
    } else {
        node.residual_energy -= cost;
    }
    return node;
}

}  // namespace wsn
