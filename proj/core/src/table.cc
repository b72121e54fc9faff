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

#include "qfid/table.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "json.hpp"

using namespace qfid;

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

nlohmann::ordered_json json_real(double value) {
    if (std::isinf(value) && value > 0) {
        return "inf";
    }
    return round_to_table_precision(value);
}

double json_to_real(const nlohmann::json &v, const char *field) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string() && v.get<std::string>() == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    throw TableParseError(std::string("json: field '") + field + "' is not a number");
}

}  // namespace

std::string qfid::format_real(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, TABLE_SIGNIFICANT_DIGITS);
    return std::string(buf, res.ptr);
}

double qfid::parse_real(std::string_view text) {
    if (text == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (text == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    double value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty()) {
        throw TableParseError("not a real number: '" + std::string(text) + "'");
    }
    return value;
}

double qfid::round_to_table_precision(double value) {
    if (!std::isfinite(value)) {
        return value;
    }
    return parse_real(format_real(value));
}

void qfid::write_csv(std::span<const ResultRow> rows, std::ostream &out) {
    out << TABLE_HEADER << '\n';
    for (const auto &r : rows) {
        out << channel_name(r.channel) << ',' << format_real(r.alpha) << ',' << format_real(r.p) << ','
            << format_real(r.mean_qfi) << ',' << format_real(r.chi_squared) << '\n';
    }
}

std::vector<ResultRow> qfid::read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw TableParseError("csv: empty input");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != TABLE_HEADER) {
        throw TableParseError("csv: expected header '" + std::string(TABLE_HEADER) + "', got '" + line + "'");
    }
    std::vector<ResultRow> rows;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto fields = split_fields(line);
        if (fields.size() != 5) {
            throw TableParseError(
                "csv line " + std::to_string(line_no) + ": expected 5 fields, got " + std::to_string(fields.size()));
        }
        try {
            rows.push_back(ResultRow{
                parse_channel_kind(fields[0]),
                parse_real(fields[1]),
                parse_real(fields[2]),
                parse_real(fields[3]),
                parse_real(fields[4]),
            });
        } catch (const std::exception &e) {
            throw TableParseError("csv line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return rows;
}

void qfid::write_json(const SweepSpec &spec, std::span<const ResultRow> rows, std::ostream &out) {
    nlohmann::ordered_json doc;
    auto &s = doc["spec"];
    s["channels"] = nlohmann::ordered_json::array();
    for (ChannelKind k : spec.channels) {
        s["channels"].push_back(channel_name(k));
    }
    s["alpha_grid"] = nlohmann::ordered_json::array();
    for (double a : spec.alpha_grid) {
        s["alpha_grid"].push_back(json_real(a));
    }
    s["p_grid"] = nlohmann::ordered_json::array();
    for (double p : spec.p_grid) {
        s["p_grid"].push_back(json_real(p));
    }
    s["n_qubits"] = spec.n_qubits;

    auto &arr = doc["rows"];
    arr = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json row;
        row["channel"] = channel_name(r.channel);
        row["alpha"] = json_real(r.alpha);
        row["p"] = json_real(r.p);
        row["mean_qfi"] = json_real(r.mean_qfi);
        row["chi_squared"] = json_real(r.chi_squared);
        arr.push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
}

std::vector<ResultRow> qfid::read_json(std::istream &in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw TableParseError(std::string("json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
        throw TableParseError("json: expected an object with a \"rows\" array");
    }
    std::vector<ResultRow> rows;
    for (const auto &r : doc["rows"]) {
        try {
            rows.push_back(ResultRow{
                parse_channel_kind(r.at("channel").get<std::string>()),
                json_to_real(r.at("alpha"), "alpha"),
                json_to_real(r.at("p"), "p"),
                json_to_real(r.at("mean_qfi"), "mean_qfi"),
                json_to_real(r.at("chi_squared"), "chi_squared"),
            });
        } catch (const TableParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw TableParseError(std::string("json row: ") + e.what());
        }
    }
    return rows;
}
