#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "wsn/config_io.hpp"
#include "wsn/engine.hpp"
#include "wsn/version.hpp"

namespace wsn {

namespace detail {

inline std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string mark_or_none(const std::optional<int>& mark) {
    return mark ? std::to_string(*mark) : std::string("none");
}

}  // namespace detail

// Per-round series as CSV. Energy gets nine decimals, which is below the
// finest charge the radio model produces, so rows compare exactly.
inline void write_rounds_csv(std::ostream& out, const std::vector<RoundMetrics>& metrics) {
    out << "round,alive,died,total_residual_j,deliveries,ch_count\n";
    for (const RoundMetrics& m : metrics) {
        out << m.round << ',' << m.alive << ',' << m.died << ','
            << detail::fmt("%.9f", m.total_residual) << ',' << m.deliveries << ','
            << m.ch_count << '\n';
    }
}

inline void write_run_summary(std::ostream& out, const SimResult& result) {
    long long deliveries = 0;
    for (const RoundMetrics& m : result.metrics) deliveries += m.deliveries;
    const double final_residual =
        result.metrics.empty() ? 0.0 : result.metrics.back().total_residual;

    out << "protocol: " << to_string(result.config.protocol) << "\n";
    out << "seed: " << result.config.seed << "\n";
    out << "nodes: " << result.config.n_nodes << "\n";
    out << "rounds_simulated: " << result.metrics.size() << "\n";
    out << "first_node_dead: " << detail::mark_or_none(result.marks.first_node_dead) << "\n";
    out << "half_nodes_dead: " << detail::mark_or_none(result.marks.half_nodes_dead) << "\n";
    out << "last_node_dead: " << detail::mark_or_none(result.marks.last_node_dead) << "\n";
    out << "total_deliveries: " << deliveries << "\n";
    out << "final_residual_j: " << detail::fmt("%.9f", final_residual) << "\n";
}

inline void write_events_log(std::ostream& out, const std::vector<RoundEvent>& events) {
    for (const RoundEvent& ev : events) out << format_event(ev) << "\n";
}

// The manifest is the exact config of a run plus commented metadata, so
// feeding it back through --config reproduces the run byte for byte.
inline void write_manifest(std::ostream& out, const SimConfig& cfg) {
    out << "# wsnsim run manifest (version " << kVersion << ")\n";
    out << "# reload with: wsnsim run --config <this file>\n";
    out << format_config(cfg);
}

inline void write_comparison_summary(std::ostream& out, const ComparisonReport& report) {
    out << "protocol_a: " << to_string(report.protocol_a) << "\n";
    out << "protocol_b: " << to_string(report.protocol_b) << "\n";
    double fnd_sum_a = 0.0, fnd_sum_b = 0.0;
    int fnd_pairs = 0;
    for (const SeedComparison& sc : report.seeds) {
        out << "seed " << sc.seed << ": lnd_a=" << detail::mark_or_none(sc.marks_a.last_node_dead)
            << " lnd_b=" << detail::mark_or_none(sc.marks_b.last_node_dead);
        if (sc.marks_a.last_node_dead && sc.marks_b.last_node_dead) {
            const double ratio = static_cast<double>(*sc.marks_b.last_node_dead) /
                                 static_cast<double>(*sc.marks_a.last_node_dead);
            out << " ratio=" << detail::fmt("%.6f", ratio);
        } else {
            out << " ratio=na";
        }
        out << " window10_a=" << sc.max_window_deaths_a
            << " window10_b=" << sc.max_window_deaths_b
            << " fnd_a=" << detail::mark_or_none(sc.marks_a.first_node_dead)
            << " fnd_b=" << detail::mark_or_none(sc.marks_b.first_node_dead) << "\n";
        if (sc.marks_a.first_node_dead && sc.marks_b.first_node_dead) {
            fnd_sum_a += *sc.marks_a.first_node_dead;
            fnd_sum_b += *sc.marks_b.first_node_dead;
            ++fnd_pairs;
        }
    }
    out << "pairs_with_ratio: " << report.ratio_pairs << "\n";
    if (report.ratio_pairs > 0) {
        out << "ratio_mean: " << detail::fmt("%.6f", report.ratio_mean) << "\n";
        out << "ratio_min: " << detail::fmt("%.6f", report.ratio_min) << "\n";
        out << "ratio_max: " << detail::fmt("%.6f", report.ratio_max) << "\n";
    } else {
        out << "ratio_mean: na\nratio_min: na\nratio_max: na\n";
    }
    out << "steeper_a_pairs: " << report.steeper_a_pairs << "\n";
    if (fnd_pairs > 0) {
        out << "fnd_mean_a: " << detail::fmt("%.1f", fnd_sum_a / fnd_pairs) << "\n";
        out << "fnd_mean_b: " << detail::fmt("%.1f", fnd_sum_b / fnd_pairs) << "\n";
    } else {
        out << "fnd_mean_a: na\nfnd_mean_b: na\n";
    }
}

}  // namespace wsn
