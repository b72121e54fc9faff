// Copyright 2026 The qfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfid/svg_plot.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "qfid/table.h"

using namespace qfid;

namespace {

constexpr double LINE_WIDTH = 720;
constexpr double LINE_HEIGHT = 480;
constexpr double MARGIN_LEFT = 70;
constexpr double MARGIN_RIGHT = 190;
constexpr double MARGIN_TOP = 40;
constexpr double MARGIN_BOTTOM = 60;

constexpr double PANEL_SIZE = 404;
constexpr double PANEL_GAP = 80;
constexpr double HEAT_MARGIN_LEFT = 70;
constexpr double HEAT_MARGIN_TOP = 70;
constexpr double HEAT_MARGIN_BOTTOM = 90;
constexpr double COLORBAR_WIDTH = 24;

constexpr size_t MAX_LISTED_MISSING = 20;

// Fixed-point rendering without locale dependence.
std::string num(double v, int decimals = 2) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, decimals);
    std::string s(buf, res.ptr);
    if (s == "-0.00" || s == "-0.0" || s == "-0") {
        s.erase(0, 1);
    }
    return s;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::vector<ChannelKind> channels_in_order(std::span<const ResultRow> rows) {
    std::vector<ChannelKind> out;
    for (const auto &r : rows) {
        if (std::find(out.begin(), out.end(), r.channel) == out.end()) {
            out.push_back(r.channel);
        }
    }
    return out;
}

// Up to ~6 round tick values covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi) {
    double span = hi - lo;
    if (!(span > 0)) {
        return {lo};
    }
    double raw = span / 5;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step - 1e-9) * step; t <= hi + 1e-9 * step; t += step) {
        ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
    }
    return ticks;
}

struct Rgb {
    double r, g, b;
};

// Viridis anchor colors; lightness increases monotonically with t.
std::string ramp_color(double t) {
    static constexpr std::array<Rgb, 5> anchors{{
        {68, 1, 84},
        {59, 82, 139},
        {33, 145, 140},
        {94, 201, 98},
        {253, 231, 37},
    }};
    t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
    double pos = t * (double)(anchors.size() - 1);
    size_t k = std::min((size_t)pos, anchors.size() - 2);
    double f = pos - (double)k;
    auto mix = [&](double a, double b) {
        return (int)std::lround(a + (b - a) * f);
    };
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", mix(anchors[k].r, anchors[k + 1].r),
                  mix(anchors[k].g, anchors[k + 1].g), mix(anchors[k].b, anchors[k + 1].b));
    return buf;
}

void svg_open(std::ostream &out, double width, double height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width, 0) << "\" height=\"" << num(height, 0)
        << "\" viewBox=\"0 0 " << num(width, 0) << ' ' << num(height, 0)
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << num(width, 0) << "\" height=\"" << num(height, 0)
        << "\" fill=\"white\"/>\n";
}

}  // namespace

std::string_view qfid::channel_color(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            return "#d62728";
        case ChannelKind::PhaseDamping:
            return "#1f4fd6";
        case ChannelKind::Depolarizing:
            return "#2ca02c";
    }
    return "black";
}

std::string qfid::render_line_plot(std::span<const ResultRow> rows) {
    auto channels = channels_in_order(rows);
    if (channels.empty()) {
        throw PlotError("line plot: table has no rows");
    }

    std::map<ChannelKind, std::vector<std::pair<double, double>>> series;
    std::map<ChannelKind, double> p_of;
    for (const auto &r : rows) {
        auto it = p_of.find(r.channel);
        if (it == p_of.end()) {
            p_of[r.channel] = r.p;
        } else if (it->second != r.p) {
            throw PlotError("line plot: channel " + std::string(channel_name(r.channel)) +
                            " has several p values; use --kind heatmap for alpha x p grids");
        }
        series[r.channel].emplace_back(r.alpha, r.mean_qfi);
    }
    double y_lo = 0;
    double y_hi = 0;
    for (auto &[kind, pts] : series) {
        if (pts.size() < 2) {
            throw PlotError("line plot: channel " + std::string(channel_name(kind)) +
                            " needs at least 2 alpha points, got " + std::to_string(pts.size()));
        }
        std::sort(pts.begin(), pts.end());
        for (const auto &pt : pts) {
            y_hi = std::max(y_hi, pt.second);
        }
    }
    if (!(y_hi > y_lo)) {
        y_hi = 1;
    }
    auto y_ticks = nice_ticks(y_lo, y_hi);
    y_hi = std::max(y_hi, y_ticks.back());

    double plot_w = LINE_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    double plot_h = LINE_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    auto sx = [&](double a) {
        return MARGIN_LEFT + a * plot_w;
    };
    auto sy = [&](double v) {
        return MARGIN_TOP + plot_h * (1 - (v - y_lo) / (y_hi - y_lo));
    };

    std::stringstream out;
    svg_open(out, LINE_WIDTH, LINE_HEIGHT);

    std::set<double> ps;
    for (const auto &[k, p] : p_of) {
        ps.insert(p);
    }
    std::string title = "Mean QFI versus alpha";
    if (ps.size() == 1) {
        title += " (p = " + format_real(*ps.begin()) + ")";
    }
    out << "<text x=\"" << num(MARGIN_LEFT + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        << xml_escape(title) << "</text>\n";

    out << "<g class=\"axes\" stroke=\"#444\" stroke-width=\"1\">\n";
    out << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(y_lo)) << "\" x2=\"" << num(sx(1)) << "\" y2=\""
        << num(sy(y_lo)) << "\"/>\n";
    out << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(y_lo)) << "\" x2=\"" << num(sx(0)) << "\" y2=\""
        << num(sy(y_hi)) << "\"/>\n";
    out << "</g>\n";
    out << "<g class=\"ticks\">\n";
    for (int k = 0; k <= 5; k++) {
        double a = k / 5.0;
        out << "<line x1=\"" << num(sx(a)) << "\" y1=\"" << num(sy(y_lo)) << "\" x2=\"" << num(sx(a)) << "\" y2=\""
            << num(sy(y_lo) + 5) << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << num(sx(a)) << "\" y=\"" << num(sy(y_lo) + 20) << "\" text-anchor=\"middle\">" << num(a, 1)
            << "</text>\n";
    }
    for (double t : y_ticks) {
        out << "<line x1=\"" << num(sx(0) - 5) << "\" y1=\"" << num(sy(t)) << "\" x2=\"" << num(sx(1)) << "\" y2=\""
            << num(sy(t)) << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << num(sx(0) - 8) << "\" y=\"" << num(sy(t) + 4) << "\" text-anchor=\"end\">" << num(t, 2)
            << "</text>\n";
    }
    out << "</g>\n";
    out << "<text x=\"" << num(MARGIN_LEFT + plot_w / 2) << "\" y=\"" << num(LINE_HEIGHT - 15)
        << "\" text-anchor=\"middle\">alpha</text>\n";
    out << "<text x=\"18\" y=\"" << num(MARGIN_TOP + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << num(MARGIN_TOP + plot_h / 2) << ")\">mean QFI</text>\n";

    for (ChannelKind kind : channels) {
        out << "<polyline class=\"series\" data-channel=\"" << channel_name(kind) << "\" fill=\"none\" stroke=\""
            << channel_color(kind) << "\" stroke-width=\"2\" points=\"";
        bool first = true;
        for (const auto &[a, v] : series[kind]) {
            out << (first ? "" : " ") << num(sx(a)) << ',' << num(sy(v));
            first = false;
        }
        out << "\"/>\n";
    }

    out << "<g class=\"legend\">\n";
    double ly = MARGIN_TOP + 10;
    for (ChannelKind kind : channels) {
        double lx = LINE_WIDTH - MARGIN_RIGHT + 15;
        out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 24) << "\" y2=\"" << num(ly)
            << "\" stroke=\"" << channel_color(kind) << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4) << "\">" << channel_name(kind) << "</text>\n";
        ly += 20;
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string qfid::render_heatmap(std::span<const ResultRow> rows) {
    auto channels = channels_in_order(rows);
    if (channels.empty()) {
        throw PlotError("heatmap: table has no rows");
    }
    std::set<double> alpha_set;
    std::set<double> p_set;
    std::map<ChannelKind, std::map<std::pair<double, double>, double>> cells;
    for (const auto &r : rows) {
        alpha_set.insert(r.alpha);
        p_set.insert(r.p);
        if (!cells[r.channel].emplace(std::make_pair(r.alpha, r.p), r.mean_qfi).second) {
            throw PlotError("heatmap: duplicate cell (channel=" + std::string(channel_name(r.channel)) +
                            ", alpha=" + format_real(r.alpha) + ", p=" + format_real(r.p) + ")");
        }
    }
    std::vector<double> alphas(alpha_set.begin(), alpha_set.end());
    std::vector<double> ps(p_set.begin(), p_set.end());

    std::vector<std::string> missing;
    size_t missing_count = 0;
    for (ChannelKind kind : channels) {
        for (double a : alphas) {
            for (double p : ps) {
                if (!cells[kind].contains({a, p})) {
                    if (missing.size() < MAX_LISTED_MISSING) {
                        missing.push_back(std::string(channel_name(kind)) + " (alpha=" + format_real(a) +
                                          ", p=" + format_real(p) + ")");
                    }
                    missing_count++;
                }
            }
        }
    }
    if (missing_count > 0) {
        std::string msg = "heatmap: ragged grid, missing " + std::to_string(missing_count) + " cell(s):";
        for (const auto &m : missing) {
            msg += "\n  " + m;
        }
        if (missing_count > missing.size()) {
            msg += "\n  ... and " + std::to_string(missing_count - missing.size()) + " more";
        }
        throw PlotError(msg);
    }

    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto &[kind, m] : cells) {
        for (const auto &[key, v] : m) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    double range = hi > lo ? hi - lo : 1.0;

    double width = HEAT_MARGIN_LEFT + (double)channels.size() * (PANEL_SIZE + PANEL_GAP) + 60;
    double height = HEAT_MARGIN_TOP + PANEL_SIZE + HEAT_MARGIN_BOTTOM;
    double cw = PANEL_SIZE / (double)alphas.size();
    double chh = PANEL_SIZE / (double)ps.size();

    std::stringstream out;
    svg_open(out, width, height);
    out << "<text x=\"" << num(width / 2) << "\" y=\"26\" text-anchor=\"middle\" font-size=\"15\">"
        << "Mean QFI as a function of alpha and p</text>\n";

    for (size_t c = 0; c < channels.size(); c++) {
        ChannelKind kind = channels[c];
        const auto &m = cells[kind];
        double x0 = HEAT_MARGIN_LEFT + (double)c * (PANEL_SIZE + PANEL_GAP);
        double y0 = HEAT_MARGIN_TOP;
        double panel_lo = INFINITY;
        double panel_hi = -INFINITY;
        out << "<g class=\"panel\" data-channel=\"" << channel_name(kind) << "\" shape-rendering=\"crispEdges\">\n";
        out << "<text x=\"" << num(x0 + PANEL_SIZE / 2) << "\" y=\"" << num(y0 - 10)
            << "\" text-anchor=\"middle\" font-size=\"13\">" << channel_name(kind) << "</text>\n";
        for (size_t i = 0; i < alphas.size(); i++) {
            for (size_t j = 0; j < ps.size(); j++) {
                double v = m.at({alphas[i], ps[j]});
                panel_lo = std::min(panel_lo, v);
                panel_hi = std::max(panel_hi, v);
                double x = x0 + (double)i * cw;
                double y = y0 + (double)(ps.size() - 1 - j) * chh;
                out << "<rect class=\"cell\" x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(cw + 0.01)
                    << "\" height=\"" << num(chh + 0.01) << "\" fill=\"" << ramp_color((v - lo) / range) << "\"/>\n";
            }
        }
        out << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(PANEL_SIZE) << "\" height=\""
            << num(PANEL_SIZE) << "\" fill=\"none\" stroke=\"#444\"/>\n";
        for (int k = 0; k <= 5; k++) {
            double t = k / 5.0;
            out << "<text x=\"" << num(x0 + t * PANEL_SIZE) << "\" y=\"" << num(y0 + PANEL_SIZE + 16)
                << "\" text-anchor=\"middle\">" << num(alphas.front() + t * (alphas.back() - alphas.front()), 1)
                << "</text>\n";
            out << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(y0 + PANEL_SIZE * (1 - t) + 4)
                << "\" text-anchor=\"end\">" << num(ps.front() + t * (ps.back() - ps.front()), 1) << "</text>\n";
        }
        out << "<text x=\"" << num(x0 + PANEL_SIZE / 2) << "\" y=\"" << num(y0 + PANEL_SIZE + 34)
            << "\" text-anchor=\"middle\">alpha</text>\n";
        out << "<text x=\"" << num(x0 - 34) << "\" y=\"" << num(y0 + PANEL_SIZE / 2) << "\" text-anchor=\"middle\">p</text>\n";
        out << "<text class=\"annotation\" x=\"" << num(x0) << "\" y=\"" << num(y0 + PANEL_SIZE + 56) << "\">min "
            << format_real(panel_lo) << ", max " << format_real(panel_hi) << "</text>\n";
        out << "</g>\n";
    }

    double bx = width - 50;
    out << "<defs><linearGradient id=\"ramp\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">\n";
    for (int k = 0; k <= 10; k++) {
        out << "<stop offset=\"" << num(k / 10.0, 1) << "\" stop-color=\"" << ramp_color(k / 10.0) << "\"/>\n";
    }
    out << "</linearGradient></defs>\n";
    out << "<g class=\"colorbar\">\n";
    out << "<rect x=\"" << num(bx) << "\" y=\"" << num(HEAT_MARGIN_TOP) << "\" width=\"" << num(COLORBAR_WIDTH)
        << "\" height=\"" << num(PANEL_SIZE) << "\" fill=\"url(#ramp)\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << num(bx + COLORBAR_WIDTH / 2) << "\" y=\"" << num(HEAT_MARGIN_TOP - 6)
        << "\" text-anchor=\"middle\">" << num(hi, 2) << "</text>\n";
    out << "<text x=\"" << num(bx + COLORBAR_WIDTH / 2) << "\" y=\"" << num(HEAT_MARGIN_TOP + PANEL_SIZE + 16)
        << "\" text-anchor=\"middle\">" << num(lo, 2) << "</text>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}
