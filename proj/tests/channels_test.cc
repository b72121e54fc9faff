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

#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace qfid;
using namespace qfid::testing;

namespace {

// Random density matrix of rank <= 3 as a mixture of random pure states.
DensityMatrix random_mixed_state(size_t n, std::mt19937_64 &rng) {
    size_t dim = size_t{1} << n;
    ComplexMatrix m(dim, dim);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double w[3] = {u(rng), u(rng), u(rng)};
    double total = w[0] + w[1] + w[2];
    for (double wk : w) {
        auto psi = random_pure_state(n, rng);
        m += ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()) * Complex{wk / total};
    }
    return DensityMatrix(n, m);
}

constexpr double PS[] = {0, 0.25, 0.5, 0.75, 1};

}  // namespace

TEST(channels, names_round_trip) {
    EXPECT_EQ(channel_name(ChannelKind::AmplitudeDamping), "amplitude_damping");
    EXPECT_EQ(channel_name(ChannelKind::PhaseDamping), "phase_damping");
    EXPECT_EQ(channel_name(ChannelKind::Depolarizing), "depolarizing");
    for (ChannelKind k : ALL_CHANNEL_KINDS) {
        EXPECT_EQ(parse_channel_kind(channel_name(k)), k);
    }
    EXPECT_THROW(parse_channel_kind("Depolarizing"), DomainError);
    EXPECT_THROW(parse_channel_kind(""), DomainError);
}

TEST(channels, completeness) {
    for (ChannelKind k : ALL_CHANNEL_KINDS) {
        for (double p : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
            QubitChannel ch = make_channel(k, p);
            EXPECT_LE(ch.completeness_deviation(), 1e-12) << channel_name(k) << " p=" << p;
            EXPECT_GE(ch.kraus.size(), 1u);
            EXPECT_LE(ch.kraus.size(), 4u);
        }
    }
}

TEST(channels, rejects_out_of_range_p) {
    EXPECT_THROW(make_channel(ChannelKind::Depolarizing, -0.01), DomainError);
    EXPECT_THROW(make_channel(ChannelKind::PhaseDamping, 1.01), DomainError);
    EXPECT_THROW(make_channel(ChannelKind::AmplitudeDamping, std::nan("")), DomainError);
}

TEST(channels, zero_strength_is_identity) {
    auto rng = test_rng(31);
    for (ChannelKind k : ALL_CHANNEL_KINDS) {
        auto rho = random_mixed_state(3, rng);
        auto ch = make_channel(k, 0);
        EXPECT_LE(max_abs_entry_diff(apply_to_qubit(rho, ch, 1).matrix(), rho.matrix()), 1e-12);
        EXPECT_LE(max_abs_entry_diff(apply_uniform(rho, ch).matrix(), rho.matrix()), 1e-12);
    }
}

TEST(channels, full_amplitude_damping_single_qubit) {
    auto rng = test_rng(32);
    auto ch = make_channel(ChannelKind::AmplitudeDamping, 1);
    ComplexMatrix ground{{1, 0}, {0, 0}};
    for (int trial = 0; trial < 5; trial++) {
        auto rho = random_mixed_state(1, rng);
        EXPECT_LE(max_abs_entry_diff(apply_to_qubit(rho, ch, 0).matrix(), ground), 1e-12);
    }
}

TEST(channels, full_depolarizing_single_qubit) {
    auto rng = test_rng(33);
    auto ch = make_channel(ChannelKind::Depolarizing, 1);
    ComplexMatrix mixed{{0.5, 0}, {0, 0.5}};
    for (int trial = 0; trial < 5; trial++) {
        auto rho = random_mixed_state(1, rng);
        EXPECT_LE(max_abs_entry_diff(apply_to_qubit(rho, ch, 0).matrix(), mixed), 1e-12);
    }
}

TEST(channels, depolarizing_is_affine_mixing) {
    // rho -> (1 - p) rho + p I/2 on one qubit.
    auto rng = test_rng(34);
    auto rho = random_mixed_state(1, rng);
    for (double p : {0.1, 0.37, 0.8}) {
        ComplexMatrix expected = rho.matrix() * Complex{1 - p} + ComplexMatrix::identity(2) * Complex{p / 2};
        auto out = apply_to_qubit(rho, make_channel(ChannelKind::Depolarizing, p), 0);
        EXPECT_LE(max_abs_entry_diff(out.matrix(), expected), 1e-14);
    }
}

TEST(channels, full_phase_damping_kills_ghz_coherence) {
    auto rho = to_density(ghz_state(2));
    auto out = apply_to_qubit(rho, make_channel(ChannelKind::PhaseDamping, 1), 0).matrix();
    EXPECT_NEAR(std::abs(out(0, 3)), 0, 1e-15);
    EXPECT_NEAR(std::abs(out(3, 0)), 0, 1e-15);
    EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(out(3, 3).real(), 0.5, 1e-15);
}

TEST(channels, qubit_index_out_of_range) {
    auto rho = to_density(ghz_state(3));
    auto ch = make_channel(ChannelKind::PhaseDamping, 0.3);
    EXPECT_THROW(apply_to_qubit(rho, ch, 3), DomainError);
    EXPECT_THROW(apply_to_qubit_kron(rho, ch, 7), DomainError);
}

TEST(channels, trace_preserved_on_random_inputs) {
    auto rng = test_rng(35);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + trial % 4;
        auto rho = random_mixed_state(n, rng);
        auto ch = make_channel(random_channel_kind(rng), u(rng));
        size_t q = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
        auto out = apply_to_qubit(rho, ch, q);
        EXPECT_NEAR(out.matrix().trace().real(), 1, 1e-12);
        EXPECT_NEAR(out.matrix().trace().imag(), 0, 1e-12);
    }
}

TEST(channels, outputs_are_valid_density_operators) {
    auto rng = test_rng(36);
    for (ChannelKind k : ALL_CHANNEL_KINDS) {
        for (double p : PS) {
            auto rho = random_mixed_state(3, rng);
            auto out = apply_uniform(rho, make_channel(k, p));
            DensityCheck c = out.check();
            EXPECT_LE(std::abs(out.matrix().trace() - Complex{1}), 1e-12);
            EXPECT_LE(c.hermitian_deviation, 1e-10);
            EXPECT_GE(c.min_eigenvalue, -1e-9);
        }
    }
}

TEST(channels, block_update_matches_kron_form) {
    auto rng = test_rng(37);
    for (size_t n = 1; n <= 4; n++) {
        for (ChannelKind k : ALL_CHANNEL_KINDS) {
            auto rho = random_mixed_state(n, rng);
            auto ch = make_channel(k, std::uniform_real_distribution<double>(0.0, 1.0)(rng));
            for (size_t q = 0; q < n; q++) {
                auto fast = apply_to_qubit(rho, ch, q);
                auto reference = apply_to_qubit_kron(rho, ch, q);
                EXPECT_LE(max_abs_entry_diff(fast.matrix(), reference.matrix()), 1e-13)
                    << "n=" << n << " q=" << q << " " << channel_name(k);
            }
        }
    }
}

TEST(channels, qubit_order_independent) {
    auto rng = test_rng(38);
    for (ChannelKind k : ALL_CHANNEL_KINDS) {
        auto rho = random_mixed_state(3, rng);
        auto ch = make_channel(k, 0.37);
        auto forward = apply_uniform(rho, ch);
        std::vector<size_t> order{0, 1, 2};
        while (std::next_permutation(order.begin(), order.end())) {
            DensityMatrix cur = rho;
            for (size_t q : order) {
                cur = apply_to_qubit(cur, ch, q);
            }
            EXPECT_LE(max_abs_entry_diff(cur.matrix(), forward.matrix()), 1e-12);
        }
    }
}

TEST(channels, uniform_full_strength_limits) {
    auto rng = test_rng(39);
    auto rho = random_mixed_state(3, rng);

    auto mixed = apply_uniform(rho, make_channel(ChannelKind::Depolarizing, 1)).matrix();
    EXPECT_LE(max_abs_entry_diff(mixed, ComplexMatrix::identity(8) * Complex{0.125}), 1e-12);

    auto ground = apply_uniform(rho, make_channel(ChannelKind::AmplitudeDamping, 1)).matrix();
    ComplexMatrix expected(8, 8);
    expected(0, 0) = 1;
    EXPECT_LE(max_abs_entry_diff(ground, expected), 1e-12);
}
