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

#include "qfid/channels.h"

#include <cmath>
#include <sstream>
#include <string>

#include "qfid/spin_ops.h"

using namespace qfid;

std::string_view qfid::channel_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            return "amplitude_damping";
        case ChannelKind::PhaseDamping:
            return "phase_damping";
        case ChannelKind::Depolarizing:
            return "depolarizing";
    }
    throw DomainError("unknown channel kind");
}

ChannelKind qfid::parse_channel_kind(std::string_view name) {
    for (ChannelKind k : ALL_CHANNEL_KINDS) {
        if (channel_name(k) == name) {
            return k;
        }
    }
    throw DomainError(
        "unknown channel '" + std::string(name) + "' (expected amplitude_damping, phase_damping or depolarizing)");
}

double QubitChannel::completeness_deviation() const {
    ComplexMatrix sum(2, 2);
    for (const auto &k : kraus) {
        sum += k.adjoint() * k;
    }
    sum -= ComplexMatrix::identity(2);
    double worst = 0;
    for (const auto &z : sum.entries()) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

QubitChannel qfid::make_channel(ChannelKind kind, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::stringstream ss;
        ss << "make_channel: decoherence strength p = " << p << " outside [0, 1]";
        throw DomainError(ss.str());
    }
    QubitChannel ch{kind, p, {}};
    double keep = std::sqrt(1.0 - p);
    double jump = std::sqrt(p);
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            ch.kraus.push_back({{1, 0}, {0, keep}});
            ch.kraus.push_back({{0, jump}, {0, 0}});
            break;
        case ChannelKind::PhaseDamping:
            ch.kraus.push_back({{1, 0}, {0, keep}});
            ch.kraus.push_back({{0, 0}, {0, jump}});
            break;
        case ChannelKind::Depolarizing: {
            double w = std::sqrt(p / 4.0);
            ch.kraus.push_back(ComplexMatrix::identity(2) * std::sqrt(1.0 - 0.75 * p));
            for (Axis a : ALL_AXES) {
                ch.kraus.push_back(pauli(a) * w);
            }
            break;
        }
    }
    return ch;
}

namespace {

void require_qubit(const DensityMatrix &rho, size_t q) {
    if (q >= rho.n_qubits()) {
        std::stringstream ss;
        ss << "qubit index " << q << " out of range for a " << rho.n_qubits() << "-qubit register";
        throw DomainError(ss.str());
    }
}

}  // namespace

DensityMatrix qfid::apply_to_qubit(const DensityMatrix &rho, const QubitChannel &ch, size_t q) {
    require_qubit(rho, q);
    const ComplexMatrix &in = rho.matrix();
    size_t dim = rho.dim();
    size_t mask = qubit_mask(rho.n_qubits(), q);

    ComplexMatrix out(dim, dim);
    ComplexMatrix left(dim, dim);
    for (const auto &k : ch.kraus) {
        Complex k00 = k(0, 0), k01 = k(0, 1), k10 = k(1, 0), k11 = k(1, 1);
        // left = (K on qubit q) * rho: mixes row pairs (r0, r1) that differ only in bit q.
        for (size_t r0 = 0; r0 < dim; r0++) {
            if (r0 & mask) {
                continue;
            }
            size_t r1 = r0 | mask;
            for (size_t c = 0; c < dim; c++) {
                Complex a = in(r0, c);
                Complex b = in(r1, c);
                left(r0, c) = k00 * a + k01 * b;
                left(r1, c) = k10 * a + k11 * b;
            }
        }
        // out += left * (K on qubit q)^dagger: mixes column pairs.
        Complex d00 = std::conj(k00), d01 = std::conj(k10), d10 = std::conj(k01), d11 = std::conj(k11);
        for (size_t r = 0; r < dim; r++) {
            for (size_t c0 = 0; c0 < dim; c0++) {
                if (c0 & mask) {
                    continue;
                }
                size_t c1 = c0 | mask;
                Complex a = left(r, c0);
                Complex b = left(r, c1);
                out(r, c0) += a * d00 + b * d10;
                out(r, c1) += a * d01 + b * d11;
            }
        }
    }
    return DensityMatrix::trusted(rho.n_qubits(), std::move(out));
}

DensityMatrix qfid::apply_to_qubit_kron(const DensityMatrix &rho, const QubitChannel &ch, size_t q) {
    require_qubit(rho, q);
    size_t n = rho.n_qubits();
    size_t max_dim = rho.dim();
    ComplexMatrix out(rho.dim(), rho.dim());
    for (const auto &k : ch.kraus) {
        ComplexMatrix lifted = q == 0 ? k : ComplexMatrix::identity(2);
        for (size_t pos = 1; pos < n; pos++) {
            lifted = kron(lifted, pos == q ? k : ComplexMatrix::identity(2), max_dim);
        }
        out += lifted * rho.matrix() * lifted.adjoint();
    }
    return DensityMatrix::trusted(n, std::move(out));
}

DensityMatrix qfid::apply_uniform(const DensityMatrix &rho, const QubitChannel &ch) {
    DensityMatrix cur = rho;
    for (size_t q = 0; q < rho.n_qubits(); q++) {
        cur = apply_to_qubit(cur, ch, q);
    }
    return cur;
}
