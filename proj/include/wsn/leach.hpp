#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wsn/config.hpp"
#include "wsn/events.hpp"
#include "wsn/ledger.hpp"
#include "wsn/node.hpp"
#include "wsn/radio.hpp"
#include "wsn/rng.hpp"

namespace wsn {

inline int leach_epoch_length(double p) {
    return static_cast<int>(std::ceil(1.0 / p));
}

// Tracks which nodes have already served as cluster head in the current
// epoch; the threshold formula gives those a zero chance until the epoch
// rolls over.
struct LeachEpochState {
    std::vector<bool> eligible;

    void reset(std::size_t n) { eligible.assign(n, true); }
};

struct LeachElection {
    std::vector<int> ch_ids;     // ascending node ids
    std::vector<int> member_ch;  // node id -> CH node id; CHs map to
                                 // themselves; -1 = no CH exists (direct
                                 // uplink) or node is dead
};

// Classic randomized rotation: an eligible node turns head when its uniform
// draw falls under T = p / (1 - p * (r mod ceil(1/p))). One draw per
// eligible alive node, ascending id. Non-heads join the nearest head
// (ties: lower id); with no heads at all the whole field uplinks directly.
inline LeachElection leach_elect(const std::vector<NodeRecord>& nodes, int round, double p,
                                 LeachEpochState& state, Rng& rng) {
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("leach_elect: p outside (0, 1]");
    if (round < 1) throw std::domain_error("leach_elect: round must be >= 1");
    if (state.eligible.size() != nodes.size()) state.reset(nodes.size());
    const int epoch = leach_epoch_length(p);
    const int r0 = round - 1;
    if (r0 % epoch == 0) state.reset(nodes.size());
    const double threshold = p / (1.0 - p * static_cast<double>(r0 % epoch));

    LeachElection out;
    out.member_ch.assign(nodes.size(), -1);
    for (const NodeRecord& n : nodes) {
        if (!n.alive || !state.eligible[n.id]) continue;
        if (rng.uniform() < threshold) {
            out.ch_ids.push_back(n.id);
            state.eligible[n.id] = false;
        }
    }
    for (const NodeRecord& n : nodes) {
        if (!n.alive) continue;
        if (std::binary_search(out.ch_ids.begin(), out.ch_ids.end(), n.id)) {
            out.member_ch[n.id] = n.id;
            continue;
        }
        int best = -1;
        double best_d = 0.0;
        for (int ch : out.ch_ids) {
            const double d = squared_distance(n.pos, nodes[ch].pos);
            if (best < 0 || d < best_d) {
                best = ch;
                best_d = d;
            }
        }
        out.member_ch[n.id] = best;
    }
    return out;
}

// One steady-state round. Control traffic is charged like everything else:
// head advertisement out to the farthest listener, a join request per
// member, a schedule broadcast per cluster. Then single-hop TDMA
// member -> CH -> BS with no failover of any kind: a head that dies
// mid-round takes its cluster's round with it, and its members' remaining
// transmissions are spent into the void.
inline int leach_steady_state(const LeachElection& election, std::vector<NodeRecord>& nodes,
                              const SimConfig& cfg, RoundLedger& ledger,
                              std::vector<RoundEvent>& events, int round) {
    const RadioModel& radio = cfg.radio;
    int deliveries = 0;

    if (election.ch_ids.empty()) {
        // nobody advertised a cluster this round: every alive node reports
        // its reading straight to the base station
        for (NodeRecord& n : nodes) {
            if (!n.alive) continue;
            charge_node(n, tx_energy(radio, radio.data_bits, distance(n.pos, cfg.bs_pos)),
                        ledger, events, round);
            ++deliveries;
            events.push_back({round, EventKind::DeliveryToBS, n.id,
                              "direct to BS, no CH elected"});
        }
        return deliveries;
    }

    const std::size_t n_clusters = election.ch_ids.size();
    std::vector<std::vector<int>> members(n_clusters);
    std::vector<int> cluster_index(nodes.size(), -1);
    for (std::size_t c = 0; c < n_clusters; ++c) cluster_index[election.ch_ids[c]] = static_cast<int>(c);
    for (const NodeRecord& n : nodes) {
        const int ch = election.member_ch[n.id];
        if (ch >= 0 && ch != n.id) members[cluster_index[ch]].push_back(n.id);
    }

    // role stamps, for observability only
    for (std::size_t c = 0; c < n_clusters; ++c) {
        NodeRecord& ch = nodes[election.ch_ids[c]];
        if (ch.alive) {
            ch.role = Role::Ch;
            ch.cluster_id = static_cast<int>(c);
        }
        for (int id : members[c]) {
            if (nodes[id].alive) {
                nodes[id].role = Role::Normal;
                nodes[id].cluster_id = static_cast<int>(c);
            }
        }
    }

    // advertisements: each alive head broadcasts far enough to reach every
    // prospective member, and every alive non-head listens to every one of
    // them to pick the nearest
    for (std::size_t c = 0; c < n_clusters; ++c) {
        NodeRecord& ch = nodes[election.ch_ids[c]];
        if (!ch.alive) continue;
        double reach = 0.0;
        for (const NodeRecord& n : nodes) {
            if (!n.alive || election.member_ch[n.id] == n.id) continue;
            reach = std::max(reach, distance(ch.pos, n.pos));
        }
        charge_node(ch, tx_energy(radio, radio.ctrl_bits, reach), ledger, events, round);
        for (NodeRecord& n : nodes) {
            if (!n.alive || election.member_ch[n.id] == n.id) continue;
            charge_node(n, rx_energy(radio, radio.ctrl_bits), ledger, events, round);
        }
    }

    // join requests
    for (NodeRecord& n : nodes) {
        const int ch_id = election.member_ch[n.id];
        if (!n.alive || ch_id < 0 || ch_id == n.id) continue;
        charge_node(n, tx_energy(radio, radio.ctrl_bits, distance(n.pos, nodes[ch_id].pos)),
                    ledger, events, round);
        if (nodes[ch_id].alive) {
            charge_node(nodes[ch_id], rx_energy(radio, radio.ctrl_bits), ledger, events, round);
        }
    }

    // schedule broadcasts
    for (std::size_t c = 0; c < n_clusters; ++c) {
        NodeRecord& ch = nodes[election.ch_ids[c]];
        if (!ch.alive) continue;
        double reach = 0.0;
        bool any = false;
        for (int id : members[c]) {
            if (!nodes[id].alive) continue;
            any = true;
            reach = std::max(reach, distance(ch.pos, nodes[id].pos));
        }
        if (!any) continue;
        charge_node(ch, tx_energy(radio, radio.ctrl_bits, reach), ledger, events, round);
        for (int id : members[c]) {
            if (!nodes[id].alive) continue;
            charge_node(nodes[id], rx_energy(radio, radio.ctrl_bits), ledger, events, round);
        }
    }

    // TDMA frames, then aggregation and the uplink hop
    for (std::size_t c = 0; c < n_clusters; ++c) {
        const int ch_id = election.ch_ids[c];
        int received = 0;
        for (int id : members[c]) {
            NodeRecord& m = nodes[id];
            if (!m.alive) continue;
            // the member cannot know whether its head is still up; a dead
            // head means the transmission is simply lost
            charge_node(m, tx_energy(radio, radio.data_bits, distance(m.pos, nodes[ch_id].pos)),
                        ledger, events, round);
            if (nodes[ch_id].alive) {
                charge_node(nodes[ch_id], rx_energy(radio, radio.data_bits), ledger, events,
                            round);
                ++received;
            }
        }
        NodeRecord& ch = nodes[ch_id];
        if (!ch.alive) continue;
        if (received > 0) {
            charge_node(ch, aggregation_energy(radio, radio.data_bits, received), ledger,
                        events, round);
        }
        if (!ch.alive) continue;  // aggregation emptied the battery
        charge_node(ch, tx_energy(radio, radio.data_bits, distance(ch.pos, cfg.bs_pos)),
                    ledger, events, round);
        ++deliveries;
        events.push_back({round, EventKind::DeliveryToBS, static_cast<int>(c),
                          "CH " + std::to_string(ch_id) + " delivers to BS"});
    }
    return deliveries;
}

}  // namespace wsn
