#pragma once

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "wsn/config.hpp"
#include "wsn/metrics.hpp"

namespace wsn {

// Reads back a rounds CSV produced by write_rounds_csv. The header must
// match exactly; anything else on disk is not our file.
inline std::vector<RoundMetrics> read_rounds_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "round,alive,died,total_residual_j,deliveries,ch_count")
        throw ConfigError("chart error: not a rounds CSV (bad header)");

    std::vector<RoundMetrics> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view sv = line;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= sv.size(); ++i) {
            if (i == sv.size() || sv[i] == ',') {
                fields.push_back(sv.substr(start, i - start));
                start = i + 1;
            }
        }
        if (fields.size() != 6)
            throw ConfigError("chart error: line " + std::to_string(lineno) +
                              " has " + std::to_string(fields.size()) + " fields, want 6");
        auto want_int = [&](std::string_view f) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || ptr != f.data() + f.size())
                throw ConfigError("chart error: bad integer '" + std::string(f) + "' on line " +
                                  std::to_string(lineno));
            return v;
        };
        auto want_double = [&](std::string_view f) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || ptr != f.data() + f.size())
                throw ConfigError("chart error: bad number '" + std::string(f) + "' on line " +
                                  std::to_string(lineno));
            return v;
        };
        RoundMetrics m;
        m.round = want_int(fields[0]);
        m.alive = want_int(fields[1]);
        m.died = want_int(fields[2]);
        m.total_residual = want_double(fields[3]);
        m.deliveries = want_int(fields[4]);
        m.ch_count = want_int(fields[5]);
        rows.push_back(m);
    }
    if (rows.empty()) throw ConfigError("chart error: CSV holds no data rows");
    return rows;
}

struct ChartSeries {
    std::string label;
    std::vector<RoundMetrics> rows;
};

namespace detail {

struct XySeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

inline std::string chart_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string chart_coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Plain SVG line chart. Fixed canvas, four y gridline steps, up to six
// x ticks, legend stacked in the top right.
inline std::string render_line_chart(const std::string& title, const std::string& y_label,
                                     const std::vector<XySeries>& series) {
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b"};
    const double px0 = 70, px1 = 770, py0 = 440, py1 = 60;

    double xmin = 0, xmax = 0, ymax = 0;
    bool first = true;
    for (const XySeries& s : series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                xmin = xmax = x;
                first = false;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymax = std::max(ymax, y);
        }
    }
    if (first) throw ConfigError("chart error: nothing to plot");
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= 0) ymax = 1;

    auto sx = [&](double x) { return px0 + (x - xmin) / (xmax - xmin) * (px1 - px0); };
    auto sy = [&](double y) { return py0 - y / ymax * (py0 - py1); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
           "viewBox=\"0 0 800 500\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"#ffffff\"/>\n";
    svg << "<text x=\"400\" y=\"30\" font-family=\"sans-serif\" font-size=\"20\" "
           "text-anchor=\"middle\">" << title << "</text>\n";
    svg << "<text x=\"20\" y=\"250\" font-family=\"sans-serif\" font-size=\"13\" "
           "text-anchor=\"middle\" transform=\"rotate(-90 20 250)\">" << y_label << "</text>\n";
    svg << "<text x=\"420\" y=\"485\" font-family=\"sans-serif\" font-size=\"13\" "
           "text-anchor=\"middle\">round</text>\n";

    for (int i = 0; i <= 4; ++i) {
        const double y = ymax * i / 4.0;
        const double py = sy(y);
        svg << "<line x1=\"" << chart_coord(px0) << "\" y1=\"" << chart_coord(py) << "\" x2=\""
            << chart_coord(px1) << "\" y2=\"" << chart_coord(py)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << chart_coord(px0 - 8) << "\" y=\"" << chart_coord(py + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
            << chart_num(y) << "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double x = xmin + (xmax - xmin) * i / 5.0;
        const double px = sx(x);
        svg << "<line x1=\"" << chart_coord(px) << "\" y1=\"" << chart_coord(py0) << "\" x2=\""
            << chart_coord(px) << "\" y2=\"" << chart_coord(py0 + 5)
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << chart_coord(px) << "\" y=\"" << chart_coord(py0 + 20)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
            << chart_num(x) << "</text>\n";
    }
    svg << "<line x1=\"" << chart_coord(px0) << "\" y1=\"" << chart_coord(py1) << "\" x2=\""
        << chart_coord(px0) << "\" y2=\"" << chart_coord(py0)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << chart_coord(px0) << "\" y1=\"" << chart_coord(py0) << "\" x2=\""
        << chart_coord(px1) << "\" y2=\"" << chart_coord(py0)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < series[s].points.size(); ++i) {
            if (i) svg << ' ';
            svg << chart_coord(sx(series[s].points[i].first)) << ','
                << chart_coord(sy(series[s].points[i].second));
        }
        svg << "\"/>\n";
        const double ly = 70 + 18 * static_cast<double>(s);
        svg << "<line x1=\"640\" y1=\"" << chart_coord(ly - 4) << "\" x2=\"665\" y2=\""
            << chart_coord(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"670\" y=\"" << chart_coord(ly) << "\" font-family=\"sans-serif\" "
               "font-size=\"12\">" << series[s].label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace detail

// Renders the three standard lifetime charts into `dir` and returns the
// file paths. Population size is recovered from the first CSV row, so the
// dead-node and average-energy views need no extra inputs.
inline std::vector<std::string> emit_charts(const std::filesystem::path& dir,
                                            const std::vector<ChartSeries>& series) {
    if (series.empty()) throw ConfigError("chart error: no series given");
    for (const ChartSeries& s : series)
        if (s.rows.empty()) throw ConfigError("chart error: series '" + s.label + "' is empty");

    auto build = [&](auto&& value) {
        std::vector<detail::XySeries> out;
        for (const ChartSeries& s : series) {
            detail::XySeries xy;
            xy.label = s.label;
            const int n = s.rows.front().alive + s.rows.front().died;
            for (const RoundMetrics& m : s.rows)
                xy.points.emplace_back(static_cast<double>(m.round), value(m, n));
            out.push_back(std::move(xy));
        }
        return out;
    };

    struct Spec {
        const char* file;
        const char* title;
        const char* y_label;
        std::vector<detail::XySeries> data;
    };
    std::vector<Spec> specs;
    specs.push_back({"live_nodes.svg", "Number Of Live Nodes", "nodes",
                     build([](const RoundMetrics& m, int) { return double(m.alive); })});
    specs.push_back({"dead_nodes.svg", "Number Of Dead Nodes", "nodes",
                     build([](const RoundMetrics& m, int n) { return double(n - m.alive); })});
    specs.push_back({"avg_residual_energy.svg", "Average Residual Energy", "joules per node",
                     build([](const RoundMetrics& m, int n) {
                         return n > 0 ? m.total_residual / n : 0.0;
                     })});

    std::vector<std::string> written;
    for (const Spec& spec : specs) {
        const std::filesystem::path path = dir / spec.file;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << detail::render_line_chart(spec.title, spec.y_label, spec.data);
        written.push_back(path.string());
    }
    return written;
}

}  // namespace wsn
