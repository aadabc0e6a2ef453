#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsn/deploy.hpp"
#include "wsn/ivc.hpp"
#include "wsn/leach.hpp"
#include "wsn/metrics.hpp"

namespace wsn {

inline double total_residual(const std::vector<NodeRecord>& nodes) {
    double sum = 0.0;
    for (const NodeRecord& n : nodes) sum += n.residual_energy;
    return sum;
}

inline int count_alive(const std::vector<NodeRecord>& nodes) {
    int alive = 0;
    for (const NodeRecord& n : nodes)
        if (n.alive) ++alive;
    return alive;
}

// Runs one full simulation. Deployment, election and failure injection each
// draw from their own substream of the run seed, so the same seed places
// the same nodes under both protocols and failure scripts replay exactly.
//
// Two books are balanced after every round and a violation throws rather
// than producing a quietly wrong series: the energy drained from batteries
// must equal what the ledger accounted for (to 1e-9 J), and the alive count
// must never grow.
inline SimResult run(const SimConfig& cfg) {
    SimConfig local = cfg;
    local.validate();

    SimResult result;
    result.config = local;

    Rng deploy_rng(substream_seed(local.seed, Stream::Deploy));
    std::vector<NodeRecord> nodes = deploy(local, deploy_rng);
    Rng election_rng(substream_seed(
        local.seed, local.protocol == Protocol::Leach ? Stream::LeachElection : Stream::IvcElection));
    Rng failure_rng(substream_seed(local.seed, Stream::Failure));

    LeachEpochState epoch;
    RoleTable prev_roles;
    int prev_alive = count_alive(nodes);

    for (int round = 1; round <= local.max_rounds; ++round) {
        const double before = total_residual(nodes);
        RoundLedger ledger;
        int deliveries = 0;
        int ch_count = 0;

        if (local.protocol == Protocol::Leach) {
            LeachElection election = leach_elect(nodes, round, local.leach_p, epoch, election_rng);
            ch_count = static_cast<int>(election.ch_ids.size());
            apply_failures(nodes, local.failures, failure_rng, round, ledger, result.events);
            deliveries = leach_steady_state(election, nodes, local, ledger, result.events, round);
        } else {
            RoundPlan plan = ivc_configuration(nodes, local, prev_roles, election_rng, ledger,
                                               result.events, round);
            for (const ClusterRoles& rc : plan.roles.clusters)
                if (rc.ch >= 0) ++ch_count;
            deliveries = ivc_steady_state(plan, nodes, local.failures, failure_rng, local, ledger,
                                          result.events, round);
            prev_roles = plan.roles;
        }

        const double after = total_residual(nodes);
        const double drop = before - after;
        const double booked = ledger.charged + ledger.discarded;
        if (std::abs(drop - booked) > 1e-9)
            throw std::logic_error("energy books out of balance in round " +
                                   std::to_string(round) + ": batteries dropped " +
                                   std::to_string(drop) + " J, ledger holds " +
                                   std::to_string(booked) + " J");

        const int alive_now = count_alive(nodes);
        if (alive_now > prev_alive)
            throw std::logic_error("alive count grew in round " + std::to_string(round));

        result.metrics.push_back(
            {round, alive_now, prev_alive - alive_now, after, deliveries, ch_count});
        prev_alive = alive_now;
        if (alive_now == 0) break;
    }

    result.marks = lifetime_marks(result.metrics);
    return result;
}

// Fills the aggregate fields of a report whose per-seed entries are already
// in place. Ratios are only computable for seeds where both runs drained
// the network completely.
inline void finalize_comparison(ComparisonReport& report) {
    report.ratio_pairs = 0;
    report.steeper_a_pairs = 0;
    report.ratio_mean = 0.0;
    report.ratio_min = 0.0;
    report.ratio_max = 0.0;
    double sum = 0.0;
    for (const SeedComparison& sc : report.seeds) {
        if (sc.marks_a.last_node_dead && sc.marks_b.last_node_dead) {
            const double ratio = static_cast<double>(*sc.marks_b.last_node_dead) /
                                 static_cast<double>(*sc.marks_a.last_node_dead);
            if (report.ratio_pairs == 0) {
                report.ratio_min = ratio;
                report.ratio_max = ratio;
            } else {
                report.ratio_min = std::min(report.ratio_min, ratio);
                report.ratio_max = std::max(report.ratio_max, ratio);
            }
            sum += ratio;
            ++report.ratio_pairs;
        }
        if (sc.max_window_deaths_a > sc.max_window_deaths_b) ++report.steeper_a_pairs;
    }
    if (report.ratio_pairs > 0) report.ratio_mean = sum / report.ratio_pairs;
}

// Paired comparison: both protocols on the same seeds, same deployments.
inline ComparisonReport compare(const SimConfig& base, const std::vector<uint64_t>& seeds,
                                Protocol protocol_a = Protocol::Leach,
                                Protocol protocol_b = Protocol::Ivc) {
    ComparisonReport report;
    report.protocol_a = protocol_a;
    report.protocol_b = protocol_b;
    for (uint64_t seed : seeds) {
        SimConfig cfg = base;
        cfg.seed = seed;

        cfg.protocol = protocol_a;
        SimResult a = run(cfg);
        cfg.protocol = protocol_b;
        SimResult b = run(cfg);

        SeedComparison sc;
        sc.seed = seed;
        sc.marks_a = a.marks;
        sc.marks_b = b.marks;
        sc.max_window_deaths_a = max_deaths_in_window(a.metrics, 10);
        sc.max_window_deaths_b = max_deaths_in_window(b.metrics, 10);
        report.seeds.push_back(sc);
    }
    finalize_comparison(report);
    return report;
}

}  // namespace wsn
