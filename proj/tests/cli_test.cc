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
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "qfid/table.h"

using namespace qfid;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string field(const std::string &text, const std::string &key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key + ": ", 0) == 0) {
            return line.substr(key.size() + 2);
        }
    }
    return "<missing " + key + ">";
}

size_t line_count(const std::string &text) {
    return (size_t)std::count(text.begin(), text.end(), '\n');
}

std::filesystem::path temp_path(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / "qfid_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cli, point_ghz) {
    auto r = run_cli({"point", "--alpha", "0", "--p", "0", "--channel", "depolarizing"});
    ASSERT_EQ(r.code, cli::EXIT_OK) << r.err;
    EXPECT_EQ(field(r.out, "mean_qfi"), "3");
    EXPECT_EQ(field(r.out, "total_qfi"), "9");
    EXPECT_EQ(field(r.out, "chi_squared"), "0.333333333333");
    EXPECT_EQ(field(r.out, "useful"), "true");
    EXPECT_EQ(field(r.out, "cramer_rao_bound"), "0.333333333333");
    EXPECT_TRUE(r.err.empty());
}

TEST(cli, point_w_and_measurements) {
    auto r = run_cli({"point", "--alpha", "1", "--p", "0", "--channel", "phase_damping", "--measurements", "100"});
    ASSERT_EQ(r.code, cli::EXIT_OK) << r.err;
    EXPECT_EQ(field(r.out, "mean_qfi"), "2.33333333333");
    EXPECT_EQ(field(r.out, "measurements"), "100");
    EXPECT_EQ(field(r.out, "cramer_rao_bound"), format_real(1 / std::sqrt(100 * 7.0)));
}

TEST(cli, point_fully_depolarized_has_no_bound) {
    auto r = run_cli({"point", "--alpha", "0.5", "--p", "1", "--channel", "depolarizing"});
    ASSERT_EQ(r.code, cli::EXIT_OK) << r.err;
    EXPECT_EQ(field(r.out, "chi_squared"), "inf");
    EXPECT_EQ(field(r.out, "useful"), "false");
    EXPECT_EQ(field(r.out, "cramer_rao_bound"), "inf");
}

TEST(cli, sweep_csv_row_count) {
    auto r = run_cli({"sweep", "--alpha-steps", "101", "--p", "0.1"});
    ASSERT_EQ(r.code, cli::EXIT_OK) << r.err;
    EXPECT_EQ(line_count(r.out), 304u);
    EXPECT_EQ(r.out.rfind(std::string(TABLE_HEADER) + "\n", 0), 0u);
    std::istringstream in(r.out);
    auto rows = read_csv(in);
    EXPECT_EQ(rows.size(), 303u);
}

TEST(cli, sweep_json_corners) {
    auto r = run_cli({"sweep", "--channels", "depolarizing", "--alpha-steps", "2", "--p-steps", "2", "--format",
                      "json"});
    ASSERT_EQ(r.code, cli::EXIT_OK) << r.err;
    std::istringstream in(r.out);
    auto rows = read_json(in);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].alpha, 0);
    EXPECT_EQ(rows[0].p, 0);
    EXPECT_EQ(rows[0].mean_qfi, 3);
    EXPECT_EQ(rows[3].alpha, 1);
    EXPECT_EQ(rows[3].p, 1);
}

TEST(cli, sweep_is_byte_deterministic) {
    std::vector<std::string> args{"sweep", "--alpha-steps", "6", "--p-steps", "6"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    args.insert(args.end(), {"--threads", "3"});
    auto c = run_cli(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
}

TEST(cli, sweep_to_file_then_plot) {
    auto table = temp_path("grid.csv");
    auto svg = temp_path("grid.svg");
    auto r = run_cli({"sweep", "--alpha-steps", "5", "--p-steps", "4", "--out", table.string()});
    ASSERT_EQ(r.code, cli::EXIT_OK) << r.err;
    EXPECT_TRUE(r.out.empty());
    r = run_cli({"plot", "--in", table.string(), "--kind", "heatmap", "--out", svg.string()});
    ASSERT_EQ(r.code, cli::EXIT_OK) << r.err;
    std::string content = slurp(svg);
    EXPECT_NE(content.find("<svg"), std::string::npos);

    auto line_table = temp_path("line.json");
    r = run_cli({"sweep", "--alpha-steps", "11", "--p", "0.1", "--format", "json", "--out", line_table.string()});
    ASSERT_EQ(r.code, cli::EXIT_OK) << r.err;
    r = run_cli({"plot", "--in", line_table.string(), "--out", "-"});
    ASSERT_EQ(r.code, cli::EXIT_OK) << r.err;
    EXPECT_NE(r.out.find("<polyline"), std::string::npos);
}

TEST(cli, usage_errors) {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"point", "--alpha", "1.5", "--p", "0", "--channel", "depolarizing"},
             {"point", "--alpha", "0.5", "--p", "0", "--channel", "bit_flip"},
             {"point", "--alpha", "0.5", "--p", "0", "--channel", "depolarizing", "--qubits", "11"},
             {"point", "--alpha", "0.5", "--p", "0", "--channel", "depolarizing", "--measurements", "0"},
             {"sweep", "--alpha", "0.5,0.2"},
             {"sweep", "--alpha", "0.5", "--alpha-steps", "3"},
             {"sweep", "--p", "x"},
             {"sweep", "--channels", "depolarizing,depolarizing"},
             {"sweep", "--format", "xml"},
         }) {
        auto r = run_cli(args);
        EXPECT_EQ(r.code, cli::EXIT_USAGE) << (args.empty() ? "<none>" : args[0]) << " " << r.out;
        EXPECT_TRUE(r.out.empty()) << r.out;
        EXPECT_FALSE(r.err.empty());
    }
}

TEST(cli, computation_error) {
    auto table = temp_path("ragged.csv");
    {
        std::ofstream f(table);
        f << TABLE_HEADER << "\n"
          << "depolarizing,0,0,3,0.333333333333\n"
          << "depolarizing,0,1,0,inf\n"
          << "depolarizing,1,0,2.33333333333,0.428571428571\n";
    }
    auto r = run_cli({"plot", "--in", table.string(), "--kind", "heatmap", "--out", "-"});
    EXPECT_EQ(r.code, cli::EXIT_COMPUTATION);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("ragged"), std::string::npos) << r.err;
}

TEST(cli, io_errors) {
    auto r = run_cli({"plot", "--in", "/nonexistent/table.csv", "--out", "-"});
    EXPECT_EQ(r.code, cli::EXIT_IO);
    EXPECT_FALSE(r.err.empty());
    r = run_cli({"sweep", "--alpha-steps", "2", "--p-steps", "2", "--out", "/nonexistent/dir/out.csv"});
    EXPECT_EQ(r.code, cli::EXIT_IO);
    EXPECT_TRUE(r.out.empty());
}
