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

#ifndef QFID_CHANNELS_H
#define QFID_CHANNELS_H

#include <array>
#include <string_view>
#include <vector>

#include "qfid/states.h"

namespace qfid {

enum class ChannelKind { AmplitudeDamping, PhaseDamping, Depolarizing };

inline constexpr std::array<ChannelKind, 3> ALL_CHANNEL_KINDS{
    ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::Depolarizing};

/// "amplitude_damping", "phase_damping" or "depolarizing".
std::string_view channel_name(ChannelKind kind);
/// Inverse of channel_name. Throws DomainError on anything else.
ChannelKind parse_channel_kind(std::string_view name);

/// Single-qubit CPTP map given by its Kraus operators.
///
/// Conventions, with p in [0, 1]:
///   amplitude damping  K0 = [[1,0],[0,sqrt(1-p)]], K1 = [[0,sqrt(p)],[0,0]]  (decays to |0>)
///   phase damping      K0 = [[1,0],[0,sqrt(1-p)]], K1 = [[0,0],[0,sqrt(p)]]
///   depolarizing       sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z  (rho -> (1-p) rho + p I/2)
struct QubitChannel {
    ChannelKind kind;
    double p;
    std::vector<ComplexMatrix> kraus;

    /// max |sum_k K_k^dagger K_k - I| over entries.
    double completeness_deviation() const;
};

/// Throws DomainError if p is outside [0, 1].
QubitChannel make_channel(ChannelKind kind, double p);

/// Applies the channel to qubit q of rho via in-place 2x2 block updates.
DensityMatrix apply_to_qubit(const DensityMatrix &rho, const QubitChannel &ch, size_t q);

/// Reference form of apply_to_qubit that lifts every Kraus operator to the
/// full register with kron. O(8^n); intended for cross-checks on small n.
DensityMatrix apply_to_qubit_kron(const DensityMatrix &rho, const QubitChannel &ch, size_t q);

/// Applies the same channel to every qubit, q = 0 .. n-1.
DensityMatrix apply_uniform(const DensityMatrix &rho, const QubitChannel &ch);

}  // namespace qfid

#endif
