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

#ifndef QFID_SWEEP_H
#define QFID_SWEEP_H

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qfid/channels.h"
#include "qfid/qfi.h"

namespace qfid {

inline constexpr size_t DEFAULT_GRID_STEPS = 101;

/// `steps` evenly spaced points from 0 to 1 inclusive (steps == 1 gives {0}).
std::vector<double> uniform_grid(size_t steps);

struct SweepSpec {
    std::vector<ChannelKind> channels{ALL_CHANNEL_KINDS.begin(), ALL_CHANNEL_KINDS.end()};
    std::vector<double> alpha_grid = uniform_grid(DEFAULT_GRID_STEPS);
    std::vector<double> p_grid = uniform_grid(DEFAULT_GRID_STEPS);
    size_t n_qubits = 3;

    /// Throws DomainError unless every grid is non-empty, ascending, and inside
    /// [0, 1], the channel list is non-empty, and 2 <= n_qubits <= cap.
    void validate(size_t qubit_cap = DEFAULT_QUBIT_CAP) const;
    size_t row_count() const {
        return channels.size() * alpha_grid.size() * p_grid.size();
    }
};

struct ResultRow {
    ChannelKind channel;
    double alpha;
    double p;
    double mean_qfi;
    double chi_squared;

    bool operator==(const ResultRow &other) const = default;
};

/// A row computation failed; carries the offending grid point.
struct SweepError : std::runtime_error {
    SweepError(ChannelKind channel, double alpha, double p, const std::string &cause);
    ChannelKind channel;
    double alpha;
    double p;
};

struct SweepOptions {
    /// Worker threads; 0 or 1 runs serially on the calling thread.
    size_t threads = 1;
};

/// Mean QFI of wghz_superposition(alpha, n) after the channel acts on every qubit.
ResultRow evaluate_point(ChannelKind channel, double alpha, double p, size_t n_qubits);

/// Evaluates every (channel, alpha, p) of the spec. Rows are ordered channel
/// outer, alpha middle, p inner, whatever the thread count.
std::vector<ResultRow> run_sweep(const SweepSpec &spec, const SweepOptions &options = {});

/// Interior samples strictly below both neighbours (by more than 1e-12).
/// Input must be sorted by alpha with at least 3 points.
std::vector<double> find_interior_local_minima(std::span<const std::pair<double, double>> series);

/// (alpha, mean_qfi) pairs of one channel at one p value, in row order.
std::vector<std::pair<double, double>> alpha_series(std::span<const ResultRow> rows, ChannelKind channel, double p);

/// Mean of mean_qfi over all rows of one channel. Throws DomainError when there are none.
double channel_average(std::span<const ResultRow> rows, ChannelKind channel);

}  // namespace qfid

#endif
