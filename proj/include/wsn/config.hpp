#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsn/geometry.hpp"
#include "wsn/radio.hpp"

namespace wsn {

// Raised for anything the user got wrong: bad config files, bad flag
// values, out-of-range parameters. The CLI maps it to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Protocol { Leach, Ivc };

inline const char* to_string(Protocol p) {
    return p == Protocol::Leach ? "leach" : "ivc";
}

struct ScriptedKill {
    int round = 0;  // 1-based round in which the node fails
    int node_id = 0;
};

// Optional fault model. Scripted kills and the per-node-per-round failure
// probability are both applied at the start of the steady-state phase.
struct FailureInjection {
    double per_round_prob = 0.0;
    std::vector<ScriptedKill> kills;

    bool none() const { return per_round_prob == 0.0 && kills.empty(); }
};

// Defaults are the 100-node, 100x100 m, 0.5 J reference scenario with the
// base station at (100, 50) on the field edge.
struct SimConfig {
    double area_width = 100.0;   // m
    double area_height = 100.0;  // m
    int n_nodes = 100;
    Position bs_pos{100.0, 50.0};
    double initial_energy = 0.5;  // J per node
    int max_rounds = 2500;
    int k_clusters = 5;
    RadioModel radio{};
    Protocol protocol = Protocol::Ivc;
    double leach_p = 0.05;
    std::uint64_t seed = 1;
    FailureInjection failures{};

    void validate() const;
};

inline void SimConfig::validate() const {
    auto bad = [](const std::string& msg) { throw ConfigError("config error: " + msg); };
    auto finite_positive = [&](double v, const char* key) {
        if (!std::isfinite(v) || v <= 0.0) bad(std::string(key) + " must be a positive finite number");
    };
    finite_positive(area_width, "area_width");
    finite_positive(area_height, "area_height");
    if (n_nodes < 1) bad("nodes must be >= 1");
    if (!std::isfinite(bs_pos.x) || !std::isfinite(bs_pos.y)) bad("bs position must be finite");
    finite_positive(initial_energy, "initial_energy");
    if (max_rounds < 1) bad("rounds must be >= 1");
    if (k_clusters < 1 || k_clusters > n_nodes) bad("k_clusters must be in [1, nodes]");
    finite_positive(radio.e_elec, "e_elec");
    finite_positive(radio.eps_fs, "eps_fs");
    finite_positive(radio.eps_mp, "eps_mp");
    finite_positive(radio.e_da, "e_da");
    finite_positive(radio.d0, "radio crossover distance");
    {
        const double expect = crossover_distance(radio.eps_fs, radio.eps_mp);
        if (std::abs(radio.d0 - expect) > 1e-12 * expect) {
            bad("radio crossover distance is inconsistent with eps_fs/eps_mp");
        }
    }
    if (radio.data_bits < 1) bad("data_bits must be >= 1");
    if (radio.ctrl_bits < 1) bad("ctrl_bits must be >= 1");
    if (!(leach_p > 0.0 && leach_p <= 1.0)) bad("leach_p must be in (0, 1]");
    if (!(failures.per_round_prob >= 0.0 && failures.per_round_prob <= 1.0)) {
        bad("fail_prob must be in [0, 1]");
    }
    for (const ScriptedKill& k : failures.kills) {
        if (k.round < 1) bad("kill round must be >= 1");
        if (k.node_id < 0 || k.node_id >= n_nodes) {
            bad("kill node id " + std::to_string(k.node_id) + " is outside [0, nodes)");
        }
    }
}

}  // namespace wsn
