#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "wsn/config.hpp"
#include "wsn/events.hpp"

namespace wsn {

// One row of the per-round series. `died` counts deaths during this round,
// `alive` is the population after the round closed.
struct RoundMetrics {
    int round = 0;
    int alive = 0;
    int died = 0;
    double total_residual = 0.0;
    int deliveries = 0;
    int ch_count = 0;
};

// The classic lifetime milestones, 1-indexed rounds. Each is empty when the
// run ended before the milestone was reached.
struct LifetimeMarks {
    std::optional<int> first_node_dead;
    std::optional<int> half_nodes_dead;
    std::optional<int> last_node_dead;
};

struct SimResult {
    SimConfig config;
    std::vector<RoundMetrics> metrics;
    LifetimeMarks marks;
    std::vector<RoundEvent> events;
};

inline LifetimeMarks lifetime_marks(const std::vector<RoundMetrics>& metrics) {
    LifetimeMarks marks;
    if (metrics.empty()) return marks;
    const int n = metrics.front().alive + metrics.front().died;
    const int half = std::max(1, n / 2);
    for (const RoundMetrics& m : metrics) {
        if (!marks.first_node_dead && m.alive < n) marks.first_node_dead = m.round;
        if (!marks.half_nodes_dead && n - m.alive >= half) marks.half_nodes_dead = m.round;
        if (!marks.last_node_dead && m.alive == 0) {
            marks.last_node_dead = m.round;
            break;
        }
    }
    return marks;
}

// Worst death toll over any window of `width` consecutive rounds. Used to
// compare how abruptly the two protocols collapse.
inline int max_deaths_in_window(const std::vector<RoundMetrics>& metrics, int width) {
    if (width < 1 || metrics.empty()) return 0;
    int best = 0;
    for (std::size_t i = 0; i < metrics.size(); ++i) {
        int sum = 0;
        for (std::size_t j = i; j < metrics.size() && j < i + static_cast<std::size_t>(width); ++j)
            sum += metrics[j].died;
        best = std::max(best, sum);
    }
    return best;
}

// Paired run of two protocols on one seed.
struct SeedComparison {
    uint64_t seed = 0;
    LifetimeMarks marks_a;
    LifetimeMarks marks_b;
    int max_window_deaths_a = 0;
    int max_window_deaths_b = 0;
};

struct ComparisonReport {
    Protocol protocol_a = Protocol::Leach;
    Protocol protocol_b = Protocol::Ivc;
    std::vector<SeedComparison> seeds;
    // lifetime ratio lnd_b / lnd_a, aggregated over seeds where both runs
    // actually drained the network
    double ratio_mean = 0.0;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    int ratio_pairs = 0;
    int steeper_a_pairs = 0;  // seeds where protocol A collapses more abruptly
};

}  // namespace wsn
