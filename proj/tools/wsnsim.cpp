// wsnsim: round-based lifetime simulator for clustered sensor networks.
//
//   wsnsim run      one protocol, one seed, full artifact set
//   wsnsim compare  both protocols across a seed range, paired deployments
//   wsnsim chart    re-render charts from saved rounds CSVs
//
// Exit codes: 0 ok, 1 bad usage or bad config, 2 runtime failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wsn/chart.hpp"
#include "wsn/config_io.hpp"
#include "wsn/engine.hpp"
#include "wsn/report.hpp"
#include "wsn/version.hpp"

namespace fs = std::filesystem;

namespace {

struct CliOverrides {
    std::string config_path;
    std::string protocol;
    uint64_t seed = 0;
    int rounds = 0;
    int nodes = 0;
    std::string area;
    std::string bs;
    int k_clusters = 0;
    double leach_p = 0.0;
    double fail_prob = 0.0;
    std::vector<std::string> kills;
    std::string out_dir = "out";
};

void add_config_flags(CLI::App* sub, CliOverrides& ov) {
    sub->add_option("--config", ov.config_path, "config file (key = value lines)");
    sub->add_option("--protocol", ov.protocol, "leach or ivc")
        ->check(CLI::IsMember({"leach", "ivc"}));
    sub->add_option("--seed", ov.seed, "run seed");
    sub->add_option("--rounds", ov.rounds, "round budget");
    sub->add_option("--nodes", ov.nodes, "node count");
    sub->add_option("--area", ov.area, "field size as WxH, e.g. 100x100");
    sub->add_option("--bs", ov.bs, "base station position as X,Y");
    sub->add_option("--k-clusters", ov.k_clusters, "cluster count");
    sub->add_option("--leach-p", ov.leach_p, "leach election probability");
    sub->add_option("--fail-prob", ov.fail_prob, "per-node per-round failure probability");
    sub->add_option("--kill", ov.kills,
                    "scripted node failure as ROUND:NODE, repeatable; overrides the config list");
    sub->add_option("--out", ov.out_dir, "output directory");
}

wsn::Position parse_xy(const std::string& text, char sep, const char* what) {
    const auto pos = text.find(sep);
    if (pos == std::string::npos)
        throw wsn::ConfigError(std::string("config error: ") + what + " wants '" + sep +
                               "'-separated pair, got '" + text + "'");
    try {
        return {std::stod(text.substr(0, pos)), std::stod(text.substr(pos + 1))};
    } catch (const std::exception&) {
        throw wsn::ConfigError(std::string("config error: cannot parse ") + what + " '" + text +
                               "'");
    }
}

// flags beat file values beat defaults
wsn::SimConfig build_config(const CLI::App* sub, const CliOverrides& ov) {
    wsn::SimConfig cfg;
    if (sub->count("--config")) {
        std::ifstream in(ov.config_path);
        if (!in) throw wsn::ConfigError("config error: cannot open '" + ov.config_path + "'");
        cfg = wsn::parse_config(in);
    }
    if (sub->count("--protocol"))
        cfg.protocol = ov.protocol == "leach" ? wsn::Protocol::Leach : wsn::Protocol::Ivc;
    if (sub->count("--seed")) cfg.seed = ov.seed;
    if (sub->count("--rounds")) cfg.max_rounds = ov.rounds;
    if (sub->count("--nodes")) cfg.n_nodes = ov.nodes;
    if (sub->count("--area")) {
        const wsn::Position wh = parse_xy(ov.area, 'x', "--area");
        cfg.area_width = wh.x;
        cfg.area_height = wh.y;
    }
    if (sub->count("--bs")) cfg.bs_pos = parse_xy(ov.bs, ',', "--bs");
    if (sub->count("--k-clusters")) cfg.k_clusters = ov.k_clusters;
    if (sub->count("--leach-p")) cfg.leach_p = ov.leach_p;
    if (sub->count("--fail-prob")) cfg.failures.per_round_prob = ov.fail_prob;
    if (sub->count("--kill")) {
        cfg.failures.kills.clear();
        for (const std::string& spec : ov.kills) {
            const auto colon = spec.find(':');
            if (colon == std::string::npos)
                throw wsn::ConfigError("config error: --kill wants ROUND:NODE, got '" + spec +
                                       "'");
            try {
                cfg.failures.kills.push_back(
                    {std::stoi(spec.substr(0, colon)), std::stoi(spec.substr(colon + 1))});
            } catch (const std::exception&) {
                throw wsn::ConfigError("config error: cannot parse --kill '" + spec + "'");
            }
        }
    }
    cfg.validate();
    return cfg;
}

void write_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << body;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string run_artifacts(const wsn::SimResult& result, const fs::path& dir,
                          const std::string& stem) {
    std::ostringstream csv, summary, events;
    wsn::write_rounds_csv(csv, result.metrics);
    wsn::write_run_summary(summary, result);
    wsn::write_events_log(events, result.events);
    write_file(dir / (stem + "rounds.csv"), csv.str());
    write_file(dir / (stem + "summary.txt"), summary.str());
    write_file(dir / (stem + "events.log"), events.str());
    return (dir / (stem + "rounds.csv")).string();
}

int cmd_run(const CLI::App* sub, const CliOverrides& ov) {
    const wsn::SimConfig cfg = build_config(sub, ov);
    const fs::path dir(ov.out_dir);
    fs::create_directories(dir);

    // manifest goes out first so even an interrupted run stays reproducible
    std::ostringstream manifest;
    wsn::write_manifest(manifest, cfg);
    write_file(dir / "manifest.txt", manifest.str());

    const wsn::SimResult result = wsn::run(cfg);
    run_artifacts(result, dir, "");

    std::cout << "simulated " << result.metrics.size() << " rounds ("
              << wsn::to_string(cfg.protocol) << ", seed " << cfg.seed << ")\n";
    std::cout << "artifacts in " << dir.string()
              << ": manifest.txt rounds.csv summary.txt events.log\n";
    return 0;
}

int cmd_compare(const CLI::App* sub, const CliOverrides& ov, int seed_count) {
    const wsn::SimConfig base = build_config(sub, ov);
    if (seed_count < 1) throw wsn::ConfigError("config error: --seeds wants at least 1");
    const fs::path dir(ov.out_dir);
    fs::create_directories(dir);

    wsn::ComparisonReport report;
    report.protocol_a = wsn::Protocol::Leach;
    report.protocol_b = wsn::Protocol::Ivc;
    std::vector<wsn::ChartSeries> first_pair;

    for (int s = 1; s <= seed_count; ++s) {
        wsn::SimConfig cfg = base;
        cfg.seed = static_cast<uint64_t>(s);
        wsn::SeedComparison sc;
        sc.seed = cfg.seed;
        for (const wsn::Protocol proto : {wsn::Protocol::Leach, wsn::Protocol::Ivc}) {
            cfg.protocol = proto;
            const wsn::SimResult result = wsn::run(cfg);
            const std::string stem =
                std::string(wsn::to_string(proto)) + "_seed" + std::to_string(s) + ".";
            run_artifacts(result, dir, stem);
            if (s == 1) first_pair.push_back({wsn::to_string(proto), result.metrics});
            if (proto == wsn::Protocol::Leach) {
                sc.marks_a = result.marks;
                sc.max_window_deaths_a = wsn::max_deaths_in_window(result.metrics, 10);
            } else {
                sc.marks_b = result.marks;
                sc.max_window_deaths_b = wsn::max_deaths_in_window(result.metrics, 10);
            }
        }
        report.seeds.push_back(sc);
    }
    wsn::finalize_comparison(report);

    std::ostringstream summary;
    wsn::write_comparison_summary(summary, report);
    write_file(dir / "comparison.txt", summary.str());
    wsn::emit_charts(dir, first_pair);

    std::cout << summary.str();
    std::cout << "artifacts in " << dir.string() << "\n";
    return 0;
}

int cmd_chart(const CliOverrides& ov, const std::vector<std::string>& csvs,
              const std::vector<std::string>& labels) {
    std::vector<wsn::ChartSeries> series;
    for (std::size_t i = 0; i < csvs.size(); ++i) {
        std::ifstream in(csvs[i]);
        if (!in) throw wsn::ConfigError("config error: cannot open '" + csvs[i] + "'");
        wsn::ChartSeries s;
        s.label = i < labels.size() ? labels[i] : fs::path(csvs[i]).stem().string();
        s.rows = wsn::read_rounds_csv(in);
        series.push_back(std::move(s));
    }
    const fs::path dir(ov.out_dir);
    fs::create_directories(dir);
    for (const std::string& path : wsn::emit_charts(dir, series))
        std::cout << "wrote " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clustered sensor network lifetime simulator"};
    app.set_version_flag("--version", std::string("wsnsim ") + wsn::kVersion);
    app.require_subcommand(1);

    CliOverrides run_ov, cmp_ov, chart_ov;
    int seed_count = 10;
    std::vector<std::string> chart_csvs, chart_labels;

    CLI::App* run_cmd = app.add_subcommand("run", "simulate one protocol on one seed");
    add_config_flags(run_cmd, run_ov);

    CLI::App* cmp_cmd = app.add_subcommand("compare", "paired leach/ivc runs over a seed range");
    add_config_flags(cmp_cmd, cmp_ov);
    cmp_cmd->add_option("--seeds", seed_count, "number of seeds, runs use seeds 1..N");

    CLI::App* chart_cmd = app.add_subcommand("chart", "render charts from rounds CSVs");
    chart_cmd->add_option("csv", chart_csvs, "rounds CSV files")->required();
    chart_cmd->add_option("--label", chart_labels, "series label per CSV, repeatable");
    chart_cmd->add_option("--out", chart_ov.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_cmd, run_ov);
        if (cmp_cmd->parsed()) return cmd_compare(cmp_cmd, cmp_ov, seed_count);
        if (chart_cmd->parsed()) return cmd_chart(chart_ov, chart_csvs, chart_labels);
    } catch (const wsn::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
