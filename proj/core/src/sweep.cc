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

#include "qfid/sweep.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

using namespace qfid;

namespace {

constexpr double MINIMUM_STRICTNESS = 1e-12;

void validate_grid(const std::vector<double> &grid, const char *name) {
    if (grid.empty()) {
        throw DomainError(std::string(name) + " grid is empty");
    }
    for (size_t k = 0; k < grid.size(); k++) {
        if (!(grid[k] >= 0.0 && grid[k] <= 1.0)) {
            std::stringstream ss;
            ss << name << " grid value " << grid[k] << " outside [0, 1]";
            throw DomainError(ss.str());
        }
        if (k > 0 && !(grid[k] > grid[k - 1])) {
            std::stringstream ss;
            ss << name << " grid is not strictly ascending at index " << k;
            throw DomainError(ss.str());
        }
    }
}

std::string describe_point(ChannelKind channel, double alpha, double p, const std::string &cause) {
    std::stringstream ss;
    ss << "at (channel=" << channel_name(channel) << ", alpha=" << alpha << ", p=" << p << "): " << cause;
    return ss.str();
}

}  // namespace

std::vector<double> qfid::uniform_grid(size_t steps) {
    if (steps == 0) {
        throw DomainError("uniform_grid: need at least one step");
    }
    std::vector<double> grid(steps);
    for (size_t k = 0; k < steps; k++) {
        grid[k] = steps == 1 ? 0.0 : (double)k / (double)(steps - 1);
    }
    return grid;
}

void SweepSpec::validate(size_t qubit_cap) const {
    if (channels.empty()) {
        throw DomainError("sweep needs at least one channel");
    }
    validate_grid(alpha_grid, "alpha");
    validate_grid(p_grid, "p");
    if (n_qubits < 2) {
        throw DomainError("sweep needs at least 2 qubits");
    }
    register_dim(n_qubits, qubit_cap);
}

SweepError::SweepError(ChannelKind channel, double alpha, double p, const std::string &cause)
    : std::runtime_error(describe_point(channel, alpha, p, cause)), channel(channel), alpha(alpha), p(p) {
}

ResultRow qfid::evaluate_point(ChannelKind channel, double alpha, double p, size_t n_qubits) {
    DensityMatrix rho = apply_uniform(to_density(wghz_superposition(alpha, n_qubits)), make_channel(channel, p));
    QfiResult r = max_mean_qfi(rho);
    return ResultRow{channel, alpha, p, r.mean_qfi, r.chi_squared};
}

std::vector<ResultRow> qfid::run_sweep(const SweepSpec &spec, const SweepOptions &options) {
    spec.validate();
    size_t na = spec.alpha_grid.size();
    size_t np = spec.p_grid.size();
    size_t total = spec.row_count();
    std::vector<ResultRow> rows(total);

    auto compute = [&](size_t index) {
        ChannelKind ch = spec.channels[index / (na * np)];
        double alpha = spec.alpha_grid[(index / np) % na];
        double p = spec.p_grid[index % np];
        try {
            rows[index] = evaluate_point(ch, alpha, p, spec.n_qubits);
        } catch (const std::exception &e) {
            throw SweepError(ch, alpha, p, e.what());
        }
    };

    size_t threads = std::min(options.threads, total);
    if (threads <= 1) {
        for (size_t k = 0; k < total; k++) {
            compute(k);
        }
        return rows;
    }

    // Workers claim indices from a shared counter; the lowest failing index wins
    // so the reported error does not depend on scheduling.
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    size_t error_index = total;
    std::exception_ptr error;
    auto worker = [&]() {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= total) {
                return;
            }
            try {
                compute(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (k < error_index) {
                    error_index = k;
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (size_t t = 0; t < threads; t++) {
        pool.emplace_back(worker);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return rows;
}

std::vector<double> qfid::find_interior_local_minima(std::span<const std::pair<double, double>> series) {
    if (series.size() < 3) {
        throw DomainError("find_interior_local_minima: need at least 3 points");
    }
    std::vector<double> minima;
    for (size_t k = 1; k + 1 < series.size(); k++) {
        double v = series[k].second;
        if (series[k - 1].second - v > MINIMUM_STRICTNESS && series[k + 1].second - v > MINIMUM_STRICTNESS) {
            minima.push_back(series[k].first);
        }
    }
    return minima;
}

std::vector<std::pair<double, double>> qfid::alpha_series(
    std::span<const ResultRow> rows, ChannelKind channel, double p) {
    std::vector<std::pair<double, double>> out;
    for (const auto &r : rows) {
        if (r.channel == channel && r.p == p) {
            out.emplace_back(r.alpha, r.mean_qfi);
        }
    }
    return out;
}

double qfid::channel_average(std::span<const ResultRow> rows, ChannelKind channel) {
    double total = 0;
    size_t count = 0;
    for (const auto &r : rows) {
        if (r.channel == channel) {
            total += r.mean_qfi;
            count++;
        }
    }
    if (count == 0) {
        throw DomainError("channel_average: no rows for " + std::string(channel_name(channel)));
    }
    return total / (double)count;
}
