#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "wsn/config.hpp"
#include "wsn/election.hpp"
#include "wsn/events.hpp"
#include "wsn/ledger.hpp"
#include "wsn/radio.hpp"

namespace wsn {

// Everything the base station announces for one round: the partition, the
// score table it was derived from, the four leadership roles per cluster,
// and per-cluster TDMA frames covering the Normal members. Leaders and
// their vices hold no slot; the vices idle in reserve until activated.
struct RoundPlan {
    ClusterAssignment clusters;
    ValueTable values;
    RoleTable roles;
    std::vector<std::vector<int>> tdma;  // per cluster, ascending node ids
};

// Configuration phase. Every alive node pays to report its status to the
// base station (ctrl bits over its BS distance); the BS partitions, scores
// and elects; every node still alive pays to receive the announcement.
// Nodes that die reporting in are not part of the plan. The returned plan
// is empty when nobody survives the reporting step.
inline RoundPlan ivc_configuration(std::vector<NodeRecord>& nodes, const SimConfig& cfg,
                                   const RoleTable& prev_roles, Rng& rng,
                                   RoundLedger& ledger, std::vector<RoundEvent>& events,
                                   int round) {
    const RadioModel& radio = cfg.radio;
    for (NodeRecord& n : nodes) {
        if (!n.alive) continue;
        charge_node(n, tx_energy(radio, radio.ctrl_bits, distance(n.pos, cfg.bs_pos)),
                    ledger, events, round);
    }

    RoundPlan plan;
    bool any_alive = false;
    for (NodeRecord& n : nodes) {
        if (n.alive) {
            any_alive = true;
            n.was_ch_prev_round = prev_roles.is_ch(n.id);
        }
    }
    if (!any_alive) return plan;

    RoundConfiguration conf = configure_round(nodes, cfg, prev_roles, rng);
    apply_roles(nodes, conf.assignment, conf.roles);
    plan.clusters = std::move(conf.assignment);
    plan.values = std::move(conf.values);
    plan.roles = std::move(conf.roles);

    for (NodeRecord& n : nodes) {
        if (!n.alive) continue;
        charge_node(n, rx_energy(radio, radio.ctrl_bits), ledger, events, round);
    }

    plan.tdma.resize(plan.clusters.size());
    for (std::size_t c = 0; c < plan.clusters.size(); ++c) {
        const ClusterRoles& rc = plan.roles.clusters[c];
        for (int id : plan.clusters.members[c]) {
            // only Normal members get slots; the vices stand by in reserve
            if (id == rc.ch || (rc.chsec && id == *rc.chsec) || (rc.chv && id == *rc.chv) ||
                (rc.chsecv && id == *rc.chsecv))
                continue;
            if (!nodes[id].alive) continue;  // died receiving the announcement
            plan.tdma[c].push_back(id);
        }
    }
    return plan;
}

// Steady-state phase. Failure injection lands first, then each cluster runs
// its TDMA frame. Every member transmission is answered by a short live
// message from the acting collector; a missing answer is how the cluster
// learns the collector is gone, promotes the next one and lets the member
// repeat its transmission. After the frame the collector aggregates what it
// received, hands the fused packet to the acting head over a short
// ack'd exchange, and the head uplinks to the base station.
//
// Substitution order is fixed: CHsecv stands in for CHsec, CHv for CH, each
// at most once per round. When both collector roles are gone, collection
// degrades onto the acting head; when both head roles are gone, the
// collector uplinks directly. Only a cluster with no alive leader at all is
// isolated, and then its members stay quiet for the round.
inline int ivc_steady_state(const RoundPlan& plan, std::vector<NodeRecord>& nodes,
                            const FailureInjection& failures, Rng& failure_rng,
                            const SimConfig& cfg, RoundLedger& ledger,
                            std::vector<RoundEvent>& events, int round) {
    const RadioModel& radio = cfg.radio;
    apply_failures(nodes, failures, failure_rng, round, ledger, events);

    int deliveries = 0;
    for (std::size_t c = 0; c < plan.roles.clusters.size(); ++c) {
        const ClusterRoles& rc = plan.roles.clusters[c];
        const int cluster = static_cast<int>(c);
        const int ch = rc.ch;
        const int chsec = rc.chsec.value_or(-1);
        const int chv = rc.chv.value_or(-1);
        const int chsecv = rc.chsecv.value_or(-1);
        auto alive = [&](int id) { return id >= 0 && nodes[id].alive; };

        if (!alive(ch) && !alive(chsec) && !alive(chv) && !alive(chsecv)) {
            events.push_back({round, EventKind::ClusterIsolated, cluster,
                              "no alive leader, members skip the round"});
            continue;
        }

        bool chsec_substituted = false;
        bool chv_activated = false;

        // Next collection duty holder, skipping the dead: the planned
        // CHsec, then CHsecv (once), then whichever head role still
        // stands. Returns -1 when leadership is exhausted.
        auto next_collector = [&]() -> int {
            if (alive(chsec)) return chsec;
            if (alive(chsecv)) {
                if (!chsec_substituted) {
                    chsec_substituted = true;
                    events.push_back({round, EventKind::ChsecFailover, cluster,
                                      "CHsecv " + std::to_string(chsecv) +
                                          " replaces dead CHsec " + std::to_string(chsec)});
                }
                return chsecv;
            }
            if (alive(ch)) return ch;
            if (alive(chv)) {
                if (!chv_activated) {
                    chv_activated = true;
                    events.push_back({round, EventKind::ChFailover, cluster,
                                      "CHv " + std::to_string(chv) + " replaces dead CH " +
                                          std::to_string(ch)});
                }
                return chv;
            }
            return -1;
        };

        std::map<int, int> received;  // collector id -> signals it took in
        int cur = chsec;              // clusters with a TDMA frame always planned a CHsec
        bool isolated = false;

        for (int m : plan.tdma[c]) {
            if (isolated) break;
            NodeRecord& member = nodes[m];
            if (!member.alive) continue;  // empty slot, nothing transmits
            if (m == cur) continue;       // promoted mid-round; its data is local now
            bool served = false;
            while (!served && !isolated && member.alive) {
                // the member transmits to the collector it believes in
                charge_node(member,
                            tx_energy(radio, radio.data_bits,
                                      distance(member.pos, nodes[cur].pos)),
                            ledger, events, round);
                if (alive(cur)) {
                    charge_node(nodes[cur], rx_energy(radio, radio.data_bits), ledger,
                                events, round);
                    ++received[cur];
                }
                if (alive(cur)) {
                    // live message back to the member
                    charge_node(nodes[cur],
                                tx_energy(radio, radio.ctrl_bits,
                                          distance(nodes[cur].pos, member.pos)),
                                ledger, events, round);
                    if (member.alive) {
                        charge_node(member, rx_energy(radio, radio.ctrl_bits), ledger,
                                    events, round);
                    }
                    served = true;
                } else {
                    // no answer: promote and let the member resend
                    const int nxt = next_collector();
                    if (nxt < 0) {
                        isolated = true;
                        events.push_back({round, EventKind::ClusterIsolated, cluster,
                                          "leadership exhausted mid-frame"});
                    } else {
                        cur = nxt;
                    }
                }
            }
        }
        if (isolated) continue;

        // aggregation: the collector fuses what it personally received
        int collector = alive(cur) ? cur : next_collector();
        if (collector < 0) {
            events.push_back({round, EventKind::ClusterIsolated, cluster,
                              "leadership exhausted before aggregation"});
            continue;
        }
        {
            const auto it = received.find(collector);
            const int signals = it == received.end() ? 0 : it->second;
            if (signals > 0) {
                charge_node(nodes[collector], aggregation_energy(radio, radio.data_bits, signals),
                            ledger, events, round);
            }
        }

        // hand the fused packet up to the acting head. The collector probes
        // the planned head first; a silent head is how it discovers the
        // failover. A dead collector at any point simply ends the exchange:
        // nobody retransmits on its behalf.
        bool transferred = false;
        if (collector != ch && collector != chv && alive(collector)) {
            int up = -1;
            for (int candidate : {ch, chv}) {
                if (candidate < 0) continue;
                if (!alive(collector)) break;
                charge_node(nodes[collector],
                            tx_energy(radio, radio.ctrl_bits,
                                      distance(nodes[collector].pos, nodes[candidate].pos)),
                            ledger, events, round);
                if (!alive(candidate)) continue;  // no ack will come
                charge_node(nodes[candidate], rx_energy(radio, radio.ctrl_bits), ledger,
                            events, round);
                if (!alive(candidate)) continue;  // died receiving the probe
                if (candidate == chv && !chv_activated) {
                    chv_activated = true;
                    events.push_back({round, EventKind::ChFailover, cluster,
                                      "CHv " + std::to_string(chv) + " replaces dead CH " +
                                          std::to_string(ch)});
                }
                charge_node(nodes[candidate],
                            tx_energy(radio, radio.ctrl_bits,
                                      distance(nodes[candidate].pos, nodes[collector].pos)),
                            ledger, events, round);
                if (alive(collector)) {
                    charge_node(nodes[collector], rx_energy(radio, radio.ctrl_bits), ledger,
                                events, round);
                }
                up = candidate;
                break;
            }
            if (up >= 0 && alive(collector)) {
                charge_node(nodes[collector],
                            tx_energy(radio, radio.data_bits,
                                      distance(nodes[collector].pos, nodes[up].pos)),
                            ledger, events, round);
                if (alive(up)) {
                    charge_node(nodes[up], rx_energy(radio, radio.data_bits), ledger, events,
                                round);
                    transferred = true;
                }
            }
        }

        // uplink. An alive acting head always reports, fused packet or not:
        // its own reading goes up even when the cluster's round fell apart.
        int uplink = -1;
        if (alive(ch)) {
            uplink = ch;
        } else if (alive(chv)) {
            if (!chv_activated) {
                chv_activated = true;
                events.push_back({round, EventKind::ChFailover, cluster,
                                  "CHv " + std::to_string(chv) + " replaces dead CH " +
                                      std::to_string(ch)});
            }
            uplink = chv;
        }
        if (uplink >= 0) {
            charge_node(nodes[uplink],
                        tx_energy(radio, radio.data_bits,
                                  distance(nodes[uplink].pos, cfg.bs_pos)),
                        ledger, events, round);
            ++deliveries;
            events.push_back({round, EventKind::DeliveryToBS, cluster,
                              "node " + std::to_string(uplink) +
                                  (transferred && uplink != collector ? " delivers fused data"
                                                                      : " delivers to BS")});
        } else if (alive(collector)) {
            // both head roles are gone: the collector goes straight up
            charge_node(nodes[collector],
                        tx_energy(radio, radio.data_bits,
                                  distance(nodes[collector].pos, cfg.bs_pos)),
                        ledger, events, round);
            ++deliveries;
            events.push_back({round, EventKind::DeliveryToBS, cluster,
                              "collector " + std::to_string(collector) +
                                  " delivers direct, CH and CHv dead"});
        } else {
            events.push_back({round, EventKind::ClusterIsolated, cluster,
                              "leadership exhausted before uplink"});
        }
    }
    return deliveries;
}

}  // namespace wsn
