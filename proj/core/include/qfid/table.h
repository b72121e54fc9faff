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

#ifndef QFID_TABLE_H
#define QFID_TABLE_H

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfid/sweep.h"

namespace qfid {

/// Column order of every serialized result table.
inline constexpr std::string_view TABLE_HEADER = "channel,alpha,p,mean_qfi,chi_squared";

inline constexpr int TABLE_SIGNIFICANT_DIGITS = 12;

/// Malformed table input.
struct TableParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest-form rendering with 12 significant digits, '.' decimal separator,
/// independent of the global locale. Infinity renders as "inf".
std::string format_real(double value);

/// Inverse of format_real. Throws TableParseError on anything else.
double parse_real(std::string_view text);

/// `value` rounded to the 12 digits format_real would print.
double round_to_table_precision(double value);

/// Header line plus one line per row, '\n' terminated.
void write_csv(std::span<const ResultRow> rows, std::ostream &out);
std::vector<ResultRow> read_csv(std::istream &in);

/// {"spec": {...}, "rows": [...]}; the chi^2 sentinel is written as the string "inf".
void write_json(const SweepSpec &spec, std::span<const ResultRow> rows, std::ostream &out);
/// Reads the "rows" array of a document produced by write_json.
std::vector<ResultRow> read_json(std::istream &in);

}  // namespace qfid

#endif
