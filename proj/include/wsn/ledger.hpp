#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsn/config.hpp"
#include "wsn/events.hpp"
#include "wsn/node.hpp"
#include "wsn/rng.hpp"

namespace wsn {

// Books for one round. `charged` is energy drawn by radio and aggregation
// work; `discarded` is energy thrown away when failure injection removes a
// node with charge left in it. Per round, the drop in total residual energy
// must equal charged + discarded.
struct RoundLedger {
    double charged = 0.0;
    double discarded = 0.0;
};

// In-place counterpart of deduct() that keeps the books and emits NodeDied
// when the charge empties the battery. Every engine charge goes through
// here, which is what makes the no-dead-charges rule enforceable: charging
// a dead node throws instead of silently corrupting the accounting.
inline void charge_node(NodeRecord& n, double cost, RoundLedger& ledger,
                        std::vector<RoundEvent>& events, int round) {
    if (!n.alive) {
        throw std::logic_error("dead-node-charge: node " + std::to_string(n.id) +
                               " in round " + std::to_string(round));
    }
    if (cost >= n.residual_energy) {
        ledger.charged += n.residual_energy;
        n.residual_energy = 0.0;
        n.alive = false;
        n.role = Role::Normal;
        n.cluster_id.reset();
        events.push_back({round, EventKind::NodeDied, n.id, "energy depleted"});
    } else {
        ledger.charged += cost;
        n.residual_energy -= cost;
    }
}

inline void kill_node(NodeRecord& n, const char* cause, RoundLedger& ledger,
                      std::vector<RoundEvent>& events, int round) {
    if (!n.alive) return;  // killing an already-dead node is a no-op
    ledger.discarded += n.residual_energy;
    n.residual_energy = 0.0;
    n.alive = false;
    n.role = Role::Normal;
    n.cluster_id.reset();
    events.push_back({round, EventKind::NodeDied, n.id, cause});
}

// Scripted kills first (ascending node id), then one probability draw per
// alive node (ascending id). Runs once per round, at steady-state entry.
inline void apply_failures(std::vector<NodeRecord>& nodes, const FailureInjection& failures,
                           Rng& rng, int round, RoundLedger& ledger,
                           std::vector<RoundEvent>& events) {
    if (!failures.kills.empty()) {
        std::vector<int> doomed;
        for (const ScriptedKill& k : failures.kills) {
            if (k.round == round) doomed.push_back(k.node_id);
        }
        std::sort(doomed.begin(), doomed.end());
        for (int id : doomed) {
            kill_node(nodes[id], "scripted failure", ledger, events, round);
        }
    }
    if (failures.per_round_prob > 0.0) {
        for (NodeRecord& n : nodes) {
            if (!n.alive) continue;
            if (rng.uniform() < failures.per_round_prob) {
                kill_node(n, "random failure", ledger, events, round);
            }
        }
    }
}

}  // namespace wsn
