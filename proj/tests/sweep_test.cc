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

#include "gtest/gtest.h"

using namespace qfid;

namespace {

SweepSpec make_spec(std::vector<ChannelKind> channels, std::vector<double> alphas, std::vector<double> ps) {
    SweepSpec spec;
    spec.channels = std::move(channels);
    spec.alpha_grid = std::move(alphas);
    spec.p_grid = std::move(ps);
    return spec;
}

}  // namespace

TEST(sweep, uniform_grid) {
    auto g = uniform_grid(101);
    ASSERT_EQ(g.size(), 101u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_DOUBLE_EQ(g[10], 0.1);
    EXPECT_EQ(uniform_grid(2), (std::vector<double>{0, 1}));
    EXPECT_EQ(uniform_grid(1), (std::vector<double>{0}));
    EXPECT_THROW(uniform_grid(0), DomainError);
}

TEST(sweep, spec_validation) {
    EXPECT_NO_THROW(SweepSpec{}.validate());
    EXPECT_THROW(make_spec({}, {0}, {0}).validate(), DomainError);
    EXPECT_THROW(make_spec({ChannelKind::Depolarizing}, {}, {0}).validate(), DomainError);
    EXPECT_THROW(make_spec({ChannelKind::Depolarizing}, {0.5, 0.2}, {0}).validate(), DomainError);
    EXPECT_THROW(make_spec({ChannelKind::Depolarizing}, {0}, {1.5}).validate(), DomainError);
    SweepSpec big = make_spec({ChannelKind::Depolarizing}, {0}, {0});
    big.n_qubits = 11;
    EXPECT_THROW(big.validate(), CapacityError);
}

TEST(sweep, noiseless_ghz_corner) {
    auto rows = run_sweep(make_spec({ALL_CHANNEL_KINDS.begin(), ALL_CHANNEL_KINDS.end()}, {0}, {0}));
    ASSERT_EQ(rows.size(), 3u);
    for (size_t k = 0; k < 3; k++) {
        EXPECT_EQ(rows[k].channel, ALL_CHANNEL_KINDS[k]);
        EXPECT_NEAR(rows[k].mean_qfi, 3.0, 1e-9);
        EXPECT_NEAR(rows[k].chi_squared, 1.0 / 3, 1e-9);
    }
}

TEST(sweep, full_amplitude_damping_gives_product_state_value) {
    auto rows = run_sweep(make_spec({ChannelKind::AmplitudeDamping}, {0, 0.5, 1}, {1}));
    ASSERT_EQ(rows.size(), 3u);
    for (const auto &r : rows) {
        EXPECT_NEAR(r.mean_qfi, 1.0, 1e-9) << r.alpha;
    }
}

TEST(sweep, full_depolarizing_gives_zero) {
    auto rows = run_sweep(make_spec({ChannelKind::Depolarizing}, {0.3}, {1}));
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NEAR(rows[0].mean_qfi, 0.0, 1e-10);
    EXPECT_TRUE(std::isinf(rows[0].chi_squared));
}

TEST(sweep, row_order_is_channel_alpha_p) {
    auto spec = make_spec({ChannelKind::PhaseDamping, ChannelKind::AmplitudeDamping}, {0, 0.5}, {0.1, 0.2, 0.3});
    auto rows = run_sweep(spec);
    ASSERT_EQ(rows.size(), 12u);
    size_t k = 0;
    for (ChannelKind ch : spec.channels) {
        for (double a : spec.alpha_grid) {
            for (double p : spec.p_grid) {
                EXPECT_EQ(rows[k].channel, ch);
                EXPECT_EQ(rows[k].alpha, a);
                EXPECT_EQ(rows[k].p, p);
                k++;
            }
        }
    }
}

TEST(sweep, deterministic_and_parallel_matches_serial) {
    auto spec = make_spec({ALL_CHANNEL_KINDS.begin(), ALL_CHANNEL_KINDS.end()}, uniform_grid(11), uniform_grid(6));
    auto serial = run_sweep(spec);
    auto serial_again = run_sweep(spec);
    auto parallel = run_sweep(spec, SweepOptions{4});
    EXPECT_EQ(serial, serial_again);
    EXPECT_EQ(serial, parallel);
}

TEST(sweep, noiseless_rows_match_pure_oracle) {
    auto spec = make_spec({ALL_CHANNEL_KINDS.begin(), ALL_CHANNEL_KINDS.end()}, uniform_grid(21), {0});
    for (const auto &r : run_sweep(spec)) {
        EXPECT_NEAR(r.mean_qfi, pure_qfi_oracle(wghz_superposition(r.alpha, 3)), 1e-8)
            << channel_name(r.channel) << " alpha=" << r.alpha;
    }
}

TEST(sweep, endpoints_match_single_state_computations) {
    auto spec = make_spec({ALL_CHANNEL_KINDS.begin(), ALL_CHANNEL_KINDS.end()}, {0, 1}, {0.2, 0.7});
    for (const auto &r : run_sweep(spec)) {
        const PureState psi = r.alpha == 0 ? ghz_state(3) : w_state(3);
        double direct = max_mean_qfi(apply_uniform(to_density(psi), make_channel(r.channel, r.p))).mean_qfi;
        EXPECT_NEAR(r.mean_qfi, direct, 1e-12);
    }
}

TEST(sweep, errors_carry_the_grid_point) {
    try {
        evaluate_point(ChannelKind::PhaseDamping, 0.5, 0.1, 11);
        FAIL();
    } catch (const CapacityError &) {
    }
    SweepSpec spec = make_spec({ChannelKind::PhaseDamping}, {0.5}, {0.1});
    spec.n_qubits = 1;
    EXPECT_THROW(run_sweep(spec), DomainError);
    SweepError e(ChannelKind::Depolarizing, 0.25, 0.5, "boom");
    std::string msg = e.what();
    EXPECT_NE(msg.find("depolarizing"), std::string::npos);
    EXPECT_NE(msg.find("alpha=0.25"), std::string::npos);
    EXPECT_NE(msg.find("boom"), std::string::npos);
}

TEST(sweep, local_minima_examples) {
    std::vector<std::pair<double, double>> valley{{0, 2}, {0.5, 1}, {1, 2}};
    EXPECT_EQ(find_interior_local_minima(valley), std::vector<double>{0.5});

    std::vector<std::pair<double, double>> rising{{0, 1}, {0.25, 2}, {0.5, 3}, {1, 4}};
    EXPECT_TRUE(find_interior_local_minima(rising).empty());

    std::vector<std::pair<double, double>> plateau{{0, 1}, {0.5, 1}, {1, 1}};
    EXPECT_TRUE(find_interior_local_minima(plateau).empty());

    std::vector<std::pair<double, double>> near_flat{{0, 1 + 1e-13}, {0.5, 1}, {1, 2}};
    EXPECT_TRUE(find_interior_local_minima(near_flat).empty());

    std::vector<std::pair<double, double>> two{{0, 1}, {1, 0}};
    EXPECT_THROW(find_interior_local_minima(two), DomainError);
}

TEST(sweep, series_and_average_helpers) {
    std::vector<ResultRow> rows{
        {ChannelKind::PhaseDamping, 0, 0.1, 2, 0.5},
        {ChannelKind::PhaseDamping, 0.5, 0.1, 3, 1.0 / 3},
        {ChannelKind::Depolarizing, 0, 0.1, 1, 1},
        {ChannelKind::PhaseDamping, 1, 0.2, 4, 0.25},
    };
    auto s = alpha_series(rows, ChannelKind::PhaseDamping, 0.1);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[1], std::make_pair(0.5, 3.0));
    EXPECT_DOUBLE_EQ(channel_average(rows, ChannelKind::PhaseDamping), 3.0);
    EXPECT_THROW(channel_average(rows, ChannelKind::AmplitudeDamping), DomainError);
}
