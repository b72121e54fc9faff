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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "qfid/svg_plot.h"
#include "qfid/table.h"

using namespace qfid;

namespace qfid::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointArgs {
    double alpha = 0;
    double p = 0;
    std::string channel;
    size_t qubits = 3;
    uint64_t measurements = 1;
};

struct SweepArgs {
    std::string channels = "all";
    std::string alpha_list;
    size_t alpha_steps = DEFAULT_GRID_STEPS;
    std::string p_list;
    size_t p_steps = DEFAULT_GRID_STEPS;
    size_t qubits = 3;
    std::string out = "-";
    std::string format = "csv";
    size_t threads = 1;
};

struct PlotArgs {
    std::string in;
    std::string kind = "line";
    std::string out;
};

std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(item);
    }
    if (!text.empty() && text.back() == ',') {
        parts.emplace_back();
    }
    return parts;
}

std::vector<double> parse_grid(const std::string &flag, const std::string &text) {
    std::vector<double> grid;
    for (const auto &part : split_commas(text)) {
        try {
            grid.push_back(parse_real(part));
        } catch (const TableParseError &) {
            throw UsageError(flag + ": '" + part + "' is not a number");
        }
    }
    if (grid.empty()) {
        throw UsageError(flag + ": expected at least one value in [0, 1]");
    }
    for (size_t k = 0; k < grid.size(); k++) {
        if (!(grid[k] >= 0 && grid[k] <= 1)) {
            throw UsageError(flag + ": value " + format_real(grid[k]) + " outside the valid range [0, 1]");
        }
        if (k > 0 && !(grid[k] > grid[k - 1])) {
            throw UsageError(flag + ": values must be strictly ascending");
        }
    }
    return grid;
}

std::vector<ChannelKind> parse_channels(const std::string &text) {
    if (text == "all") {
        return {ALL_CHANNEL_KINDS.begin(), ALL_CHANNEL_KINDS.end()};
    }
    std::vector<ChannelKind> kinds;
    for (const auto &part : split_commas(text)) {
        ChannelKind k;
        try {
            k = parse_channel_kind(part);
        } catch (const DomainError &) {
            throw UsageError("--channels: unknown channel '" + part +
                             "' (valid: all, amplitude_damping, phase_damping, depolarizing)");
        }
        if (std::find(kinds.begin(), kinds.end(), k) != kinds.end()) {
            throw UsageError("--channels: '" + part + "' listed twice");
        }
        kinds.push_back(k);
    }
    return kinds;
}

void write_output(const std::string &path, const std::string &content, std::ostream &out) {
    if (path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << content;
    f.close();
    if (!f) {
        throw IoError("failed writing '" + path + "'");
    }
}

int cmd_point(const PointArgs &a, std::ostream &out) {
    ChannelKind kind = parse_channel_kind(a.channel);
    DensityMatrix rho = apply_uniform(to_density(wghz_superposition(a.alpha, a.qubits)), make_channel(kind, a.p));
    QfiResult r = max_mean_qfi(rho);
    Usefulness u = chi_squared(r);
    double bound = r.mean_qfi >= MEAN_QFI_FLOOR ? cramer_rao_bound(r.total_qfi, a.measurements)
                                                : std::numeric_limits<double>::infinity();
    out << "channel: " << channel_name(kind) << '\n';
    out << "alpha: " << format_real(a.alpha) << '\n';
    out << "p: " << format_real(a.p) << '\n';
    out << "n_qubits: " << a.qubits << '\n';
    out << "mean_qfi: " << format_real(r.mean_qfi) << '\n';
    out << "total_qfi: " << format_real(r.total_qfi) << '\n';
    out << "chi_squared: " << format_real(u.chi_squared) << '\n';
    out << "useful: " << (u.useful ? "true" : "false") << '\n';
    out << "optimal_direction: " << format_real(r.optimal_direction.x()) << ',' << format_real(r.optimal_direction.y())
        << ',' << format_real(r.optimal_direction.z()) << '\n';
    out << "measurements: " << a.measurements << '\n';
    out << "cramer_rao_bound: " << format_real(bound) << '\n';
    return EXIT_OK;
}

int cmd_sweep(const SweepArgs &a, const CLI::App &sub, std::ostream &out) {
    SweepSpec spec;
    spec.channels = parse_channels(a.channels);
    spec.alpha_grid = sub.count("--alpha") ? parse_grid("--alpha", a.alpha_list) : uniform_grid(a.alpha_steps);
    spec.p_grid = sub.count("--p") ? parse_grid("--p", a.p_list) : uniform_grid(a.p_steps);
    spec.n_qubits = a.qubits;

    auto rows = run_sweep(spec, SweepOptions{a.threads});
    std::stringstream buf;
    if (a.format == "json") {
        write_json(spec, rows, buf);
    } else {
        write_csv(rows, buf);
    }
    write_output(a.out, buf.str(), out);
    return EXIT_OK;
}

int cmd_plot(const PlotArgs &a, std::ostream &out) {
    std::ifstream f(a.in, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + a.in + "' for reading");
    }
    bool is_json = a.in.size() >= 5 && a.in.compare(a.in.size() - 5, 5, ".json") == 0;
    std::vector<ResultRow> rows = is_json ? read_json(f) : read_csv(f);
    std::string svg = a.kind == "heatmap" ? render_heatmap(rows) : render_line_plot(rows);
    write_output(a.out, svg, out);
    return EXIT_OK;
}

CLI::Validator channel_validator() {
    return CLI::Validator(
        [](std::string &value) -> std::string {
            try {
                parse_channel_kind(value);
                return {};
            } catch (const DomainError &) {
                return "unknown channel '" + value + "' (valid: amplitude_damping, phase_damping, depolarizing)";
            }
        },
        "CHANNEL");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum Fisher information of W/GHZ superpositions under single-qubit decoherence", "qfid"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    PointArgs point;
    auto *point_cmd = app.add_subcommand("point", "Mean QFI, chi^2 and Cramer-Rao bound at one (alpha, p)");
    point_cmd->add_option("--alpha", point.alpha, "Superposition coefficient")->required()->check(CLI::Range(0.0, 1.0));
    point_cmd->add_option("--p", point.p, "Decoherence strength")->required()->check(CLI::Range(0.0, 1.0));
    point_cmd->add_option("--channel", point.channel, "amplitude_damping | phase_damping | depolarizing")
        ->required()
        ->check(channel_validator());
    point_cmd->add_option("--qubits", point.qubits, "Register size")
        ->check(CLI::Range(size_t{2}, DEFAULT_QUBIT_CAP))
        ->capture_default_str();
    point_cmd->add_option("--measurements", point.measurements, "Repetitions N_m for the Cramer-Rao bound")
        ->check(CLI::Range(uint64_t{1}, std::numeric_limits<uint64_t>::max()))
        ->capture_default_str();

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Mean QFI over an alpha x p grid for each channel");
    sweep_cmd->add_option("--channels", sweep.channels, "\"all\" or comma-separated channel names")
        ->capture_default_str();
    auto *alpha_list = sweep_cmd->add_option("--alpha", sweep.alpha_list, "Explicit comma-separated alpha values");
    auto *alpha_steps = sweep_cmd->add_option("--alpha-steps", sweep.alpha_steps, "Uniform inclusive alpha grid size")
                            ->check(CLI::Range(size_t{1}, size_t{100000}))
                            ->capture_default_str();
    auto *p_list = sweep_cmd->add_option("--p", sweep.p_list, "Explicit comma-separated p values");
    auto *p_steps = sweep_cmd->add_option("--p-steps", sweep.p_steps, "Uniform inclusive p grid size")
                        ->check(CLI::Range(size_t{1}, size_t{100000}))
                        ->capture_default_str();
    alpha_list->excludes(alpha_steps);
    p_list->excludes(p_steps);
    sweep_cmd->add_option("--qubits", sweep.qubits, "Register size")
        ->check(CLI::Range(size_t{2}, DEFAULT_QUBIT_CAP))
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out, "Output file, '-' for standard output")->capture_default_str();
    sweep_cmd->add_option("--format", sweep.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads")
        ->check(CLI::Range(size_t{1}, size_t{1024}))
        ->capture_default_str();

    PlotArgs plot;
    auto *plot_cmd = app.add_subcommand("plot", "Render a sweep table as an SVG line chart or heatmap");
    plot_cmd->add_option("--in", plot.in, "Sweep table (.csv, or .json as written by sweep)")->required();
    plot_cmd->add_option("--kind", plot.kind, "line | heatmap")
        ->check(CLI::IsMember({"line", "heatmap"}))
        ->capture_default_str();
    plot_cmd->add_option("--out", plot.out, "Output SVG file, '-' for standard output")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        err << "qfid: " << e.what() << '\n';
        return EXIT_USAGE;
    }

    try {
        if (*point_cmd) {
            return cmd_point(point, out);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep, *sweep_cmd, out);
        }
        return cmd_plot(plot, out);
    } catch (const UsageError &e) {
        err << "qfid: " << e.what() << '\n';
        return EXIT_USAGE;
    } catch (const IoError &e) {
        err << "qfid: " << e.what() << '\n';
        return EXIT_IO;
    } catch (const std::exception &e) {
        err << "qfid: " << e.what() << '\n';
        return EXIT_COMPUTATION;
    }
}

}  // namespace qfid::cli
