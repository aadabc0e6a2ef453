#pragma once

#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "wsn/config.hpp"
#include "wsn/radio.hpp"

namespace wsn {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline double parse_double(std::string_view value, const std::string& key) {
    double out = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("config error: key '" + key + "' wants a number, got '" +
                          std::string(value) + "'");
    return out;
}

inline long long parse_int(std::string_view value, const std::string& key) {
    long long out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("config error: key '" + key + "' wants an integer, got '" +
                          std::string(value) + "'");
    return out;
}

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

// Reads a flat key=value config. '#' starts a comment, blank lines are
// skipped, later keys overwrite earlier ones. `kill = ROUND:NODE` is the
// one repeatable key and appends. Unknown keys are rejected by name so a
// typo cannot silently fall back to a default.
inline SimConfig parse_config(std::istream& in) {
    SimConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        if (const auto hash = sv.find('#'); hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        sv = detail::trim(sv);
        if (sv.empty()) continue;

        const auto eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config error: line " + std::to_string(lineno) +
                              " is not key=value: '" + std::string(sv) + "'");
        const std::string key(detail::trim(sv.substr(0, eq)));
        const std::string_view value = detail::trim(sv.substr(eq + 1));

        if (key == "protocol") {
            if (value == "leach")
                cfg.protocol = Protocol::Leach;
            else if (value == "ivc")
                cfg.protocol = Protocol::Ivc;
            else
                throw ConfigError("config error: protocol must be 'leach' or 'ivc', got '" +
                                  std::string(value) + "'");
        } else if (key == "seed") {
            cfg.seed = static_cast<uint64_t>(detail::parse_int(value, key));
        } else if (key == "nodes") {
            cfg.n_nodes = static_cast<int>(detail::parse_int(value, key));
        } else if (key == "rounds") {
            cfg.max_rounds = static_cast<int>(detail::parse_int(value, key));
        } else if (key == "area_width") {
            cfg.area_width = detail::parse_double(value, key);
        } else if (key == "area_height") {
            cfg.area_height = detail::parse_double(value, key);
        } else if (key == "bs_x") {
            cfg.bs_pos.x = detail::parse_double(value, key);
        } else if (key == "bs_y") {
            cfg.bs_pos.y = detail::parse_double(value, key);
        } else if (key == "initial_energy") {
            cfg.initial_energy = detail::parse_double(value, key);
        } else if (key == "k_clusters") {
            cfg.k_clusters = static_cast<int>(detail::parse_int(value, key));
        } else if (key == "leach_p") {
            cfg.leach_p = detail::parse_double(value, key);
        } else if (key == "e_elec") {
            cfg.radio.e_elec = detail::parse_double(value, key);
        } else if (key == "eps_fs") {
            cfg.radio.eps_fs = detail::parse_double(value, key);
        } else if (key == "eps_mp") {
            cfg.radio.eps_mp = detail::parse_double(value, key);
        } else if (key == "e_da") {
            cfg.radio.e_da = detail::parse_double(value, key);
        } else if (key == "data_bits") {
            cfg.radio.data_bits = static_cast<int>(detail::parse_int(value, key));
        } else if (key == "ctrl_bits") {
            cfg.radio.ctrl_bits = static_cast<int>(detail::parse_int(value, key));
        } else if (key == "fail_prob") {
            cfg.failures.per_round_prob = detail::parse_double(value, key);
        } else if (key == "kill") {
            const auto colon = value.find(':');
            if (colon == std::string_view::npos)
                throw ConfigError("config error: kill wants ROUND:NODE, got '" +
                                  std::string(value) + "'");
            ScriptedKill kill;
            kill.round = static_cast<int>(detail::parse_int(detail::trim(value.substr(0, colon)), key));
            kill.node_id = static_cast<int>(detail::parse_int(detail::trim(value.substr(colon + 1)), key));
            cfg.failures.kills.push_back(kill);
        } else {
            throw ConfigError("config error: unknown key '" + key + "'");
        }
    }
    cfg.radio.refresh_crossover();
    cfg.validate();
    return cfg;
}

// Serializes a config so that parse_config reads back the identical run.
// Doubles go out at %.17g, which round-trips exactly.
inline std::string format_config(const SimConfig& cfg) {
    std::ostringstream out;
    out << "protocol = " << to_string(cfg.protocol) << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "nodes = " << cfg.n_nodes << "\n";
    out << "rounds = " << cfg.max_rounds << "\n";
    out << "area_width = " << detail::fmt_double(cfg.area_width) << "\n";
    out << "area_height = " << detail::fmt_double(cfg.area_height) << "\n";
    out << "bs_x = " << detail::fmt_double(cfg.bs_pos.x) << "\n";
    out << "bs_y = " << detail::fmt_double(cfg.bs_pos.y) << "\n";
    out << "initial_energy = " << detail::fmt_double(cfg.initial_energy) << "\n";
    out << "k_clusters = " << cfg.k_clusters << "\n";
    out << "leach_p = " << detail::fmt_double(cfg.leach_p) << "\n";
    out << "e_elec = " << detail::fmt_double(cfg.radio.e_elec) << "\n";
    out << "eps_fs = " << detail::fmt_double(cfg.radio.eps_fs) << "\n";
    out << "eps_mp = " << detail::fmt_double(cfg.radio.eps_mp) << "\n";
    out << "e_da = " << detail::fmt_double(cfg.radio.e_da) << "\n";
    out << "data_bits = " << cfg.radio.data_bits << "\n";
    out << "ctrl_bits = " << cfg.radio.ctrl_bits << "\n";
    out << "fail_prob = " << detail::fmt_double(cfg.failures.per_round_prob) << "\n";
    for (const ScriptedKill& kill : cfg.failures.kills)
        out << "kill = " << kill.round << ":" << kill.node_id << "\n";
    return out.str();
}

}  // namespace wsn
