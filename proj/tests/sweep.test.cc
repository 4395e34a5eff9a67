// Copyright 2026 The qwalk Authors
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

#include "qwalk/sweep.h"

#include <cmath>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qwalk/errors.h"

using namespace qwalk;

namespace {

SweepSpec hadamard_phase_spec(double step_deg = 5.0) {
    SweepSpec spec = figures::figure2_spec(AngleGrid{0, 360, step_deg, AngleUnit::kDegrees});
    return spec;
}

}  // namespace

TEST(angle_grid, size_and_values) {
    AngleGrid g{0, 360, 1, AngleUnit::kDegrees};
    EXPECT_EQ(g.size(), 361u);
    EXPECT_EQ(g.value(0), 0.0);
    EXPECT_EQ(g.value(360), 360.0);
    EXPECT_EQ((AngleGrid{0, 1, 0.1, AngleUnit::kRadians}.size()), 11u);
    EXPECT_EQ((AngleGrid{5, 5, 1, AngleUnit::kDegrees}.size()), 1u);
    EXPECT_EQ((AngleGrid{0, 10, 3, AngleUnit::kDegrees}.size()), 4u);
}

TEST(angle_grid, parse) {
    AngleGrid g = AngleGrid::parse("0:180:2", AngleUnit::kDegrees);
    EXPECT_EQ(g, (AngleGrid{0, 180, 2, AngleUnit::kDegrees}));
    AngleGrid r = AngleGrid::parse("-1.5:1.5:0.25", AngleUnit::kRadians);
    EXPECT_EQ(r.size(), 13u);
    for (const char *bad : {"", "1:2", "1:2:3:4", "a:2:1", "0:10:0", "0:10:-1", "10:0:1", "0:inf:1", "0::1"}) {
        EXPECT_THROW(AngleGrid::parse(bad, AngleUnit::kDegrees), InvalidSpec) << bad;
    }
}

TEST(phase_sweep, matches_cosine_law) {
    SweepTable table = run_phase_sweep(hadamard_phase_spec());
    Baseline b = compute_baseline(kPi / 4, 100);
    ASSERT_EQ(table.rows.size(), 73u);
    for (const auto &row : table.rows) {
        EXPECT_NEAR(row.mean, b.b0 * std::cos(deg_to_rad(row.swept)), 1e-9);
        EXPECT_EQ(row.abs_error, std::abs(row.mean - row.predicted));
    }
    EXPECT_LT(table.max_abs_error(), 1e-9);
}

TEST(phase_sweep, quarter_turn_phase_difference_is_zero) {
    SweepSpec spec = hadamard_phase_spec(15.0);
    for (const auto &row : run_phase_sweep(spec).rows) {
        spec.state.varphi = deg_to_rad(row.swept) - kPi / 2;
        EXPECT_NEAR(simulate_mean({kPi / 4, deg_to_rad(row.swept), spec.state.varphi}, spec.coin, 100), 0.0, 1e-9);
    }
}

TEST(phase_sweep, rejects_wrong_axis_and_bad_grid) {
    SweepSpec spec = hadamard_phase_spec();
    spec.axis = SweepAxis::kTheta;
    EXPECT_THROW(run_phase_sweep(spec), InvalidSpec);
    spec = hadamard_phase_spec();
    spec.grid.step = 0;
    EXPECT_THROW(run_phase_sweep(spec), InvalidSpec);
    spec.grid = {10, 0, 1, AngleUnit::kDegrees};
    EXPECT_THROW(run_phase_sweep(spec), InvalidSpec);
}

TEST(phase_sweep, radians_grid) {
    SweepSpec spec = hadamard_phase_spec();
    spec.grid = AngleGrid{0, kPi, kPi / 4, AngleUnit::kRadians};
    SweepTable t = run_phase_sweep(spec);
    ASSERT_EQ(t.rows.size(), 5u);
    EXPECT_NEAR(t.rows[2].mean, 0.0, 1e-9);
    EXPECT_NEAR(t.rows[4].mean, -t.rows[0].mean, 1e-9);
}

TEST(theta_sweep, figure4_law) {
    SweepTable table = run_theta_sweep(figures::figure4_spec(AngleGrid{0, 180, 2, AngleUnit::kDegrees}));
    Baseline b = compute_baseline(kPi / 4, 100);
    EXPECT_LT(b.a, 0.0);
    for (const auto &row : table.rows) {
        EXPECT_NEAR(row.mean, b.a * std::cos(2 * deg_to_rad(row.swept)), 1e-9);
    }
    EXPECT_NEAR(table.rows[0].mean, b.a, 1e-12);
    SweepTable at45 = run_theta_sweep(figures::figure4_spec(AngleGrid{45, 45, 1, AngleUnit::kDegrees}));
    EXPECT_NEAR(at45.rows[0].mean, 0.0, 1e-9);
}

TEST(peak_shift, identical_tables) {
    SweepTable t = run_phase_sweep(hadamard_phase_spec(1.0));
    EXPECT_EQ(peak_shift(t, t), 0.0);
}

TEST(peak_shift, figure3_coin_phases) {
    BaselineCache cache;
    SweepTable ref = run_phase_sweep(figures::figure2_spec(), &cache);
    SweepTable shifted = run_phase_sweep(figures::figure3_spec(), &cache);
    EXPECT_EQ(peak_shift(ref, shifted), -129.0);
}

TEST(peak_shift, alpha_quarter_turn) {
    SweepSpec a = hadamard_phase_spec(1.0);
    SweepSpec b = a;
    b.coin.alpha = deg_to_rad(90);
    EXPECT_EQ(peak_shift(run_phase_sweep(a), run_phase_sweep(b)), -90.0);
    EXPECT_EQ(peak_shift(run_phase_sweep(b), run_phase_sweep(a)), 90.0);
}

TEST(peak_shift, mismatched_grids) {
    SweepTable a = run_phase_sweep(hadamard_phase_spec(5.0));
    SweepTable b = run_phase_sweep(hadamard_phase_spec(10.0));
    EXPECT_THROW(peak_shift(a, b), InvalidArgument);
}

TEST(phase_plane, depends_on_difference_only) {
    PhasePlaneTable t = figures::figure1(AngleGrid{0, 360, 30, AngleUnit::kDegrees});
    ASSERT_EQ(t.rows.size(), 13u * 13u);
    Baseline b = compute_baseline(kPi / 4, 100);
    for (const auto &row : t.rows) {
        EXPECT_NEAR(row.mean, b.b0 * std::cos(deg_to_rad(row.phi - row.varphi)), 1e-9);
        EXPECT_LT(row.abs_error, 1e-9);
    }
}

TEST(run_verify, passes_and_is_reproducible) {
    VerifyOptions o;
    o.samples = 25;
    o.steps = {1, 3, 25, 100};
    VerifyReport a = run_verify(o);
    VerifyReport b = run_verify(o);
    EXPECT_TRUE(a.pass);
    EXPECT_EQ(a.entries.size(), 100u);
    EXPECT_LT(a.max_abs_error, 1e-9 * 100);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i) {
        EXPECT_EQ(a.entries[i].state.theta, b.entries[i].state.theta);
        EXPECT_EQ(a.entries[i].result.simulated, b.entries[i].result.simulated);
        EXPECT_EQ(a.entries[i].result.predicted, b.entries[i].result.predicted);
    }
    o.seed += 1;
    VerifyReport c = run_verify(o);
    EXPECT_NE(a.entries[0].state.theta, c.entries[0].state.theta);
}

TEST(run_verify, sampling_ranges) {
    VerifyOptions o;
    o.samples = 300;
    o.steps = {1};
    for (const auto &e : run_verify(o).entries) {
        for (double v : {e.state.theta, e.state.phi, e.state.varphi, e.coin.alpha, e.coin.gamma}) {
            EXPECT_GE(v, 0.0);
            EXPECT_LT(v, kTwoPi);
        }
        EXPECT_GT(e.coin.beta, 0.0);
        EXPECT_LT(e.coin.beta, kPi / 2);
    }
}

TEST(run_verify, pinned_theta_zero_predicts_baseline_a) {
    VerifyOptions o;
    o.samples = 1;
    o.steps = {7};
    o.theta = 0.0;
    VerifyReport r = run_verify(o);
    ASSERT_EQ(r.entries.size(), 1u);
    const auto &e = r.entries[0];
    EXPECT_EQ(e.result.predicted, compute_baseline(e.coin.beta, 7).a);
    EXPECT_TRUE(r.pass);
}

TEST(run_verify, pinned_beta_zero_is_ballistic) {
    VerifyOptions o;
    o.samples = 1;
    o.steps = {10};
    o.beta = 0.0;
    VerifyReport r = run_verify(o);
    const auto &e = r.entries[0];
    EXPECT_NEAR(e.result.simulated, -10.0 * std::cos(2 * e.state.theta), 1e-12);
    EXPECT_LT(e.result.abs_error, 1e-12);
}

TEST(run_verify, pinning_one_angle_keeps_the_others) {
    VerifyOptions o;
    o.samples = 3;
    o.steps = {2};
    VerifyReport free = run_verify(o);
    o.phi = 1.0;
    VerifyReport pinned = run_verify(o);
    for (size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(pinned.entries[i].state.phi, 1.0);
        EXPECT_EQ(pinned.entries[i].state.theta, free.entries[i].state.theta);
        EXPECT_EQ(pinned.entries[i].coin.gamma, free.entries[i].coin.gamma);
    }
}

TEST(run_verify, invalid_options) {
    VerifyOptions o;
    o.samples = 0;
    EXPECT_THROW(run_verify(o), InvalidParameter);
    o.samples = 1;
    o.tolerance = -1;
    EXPECT_THROW(run_verify(o), InvalidParameter);
}

TEST(verify_report_json, schema) {
    VerifyOptions o;
    o.samples = 2;
    o.steps = {1, 3};
    o.seed = 77;
    VerifyReport r = run_verify(o);
    auto j = nlohmann::json::parse(verify_report_json(r));
    EXPECT_EQ(j["seed"], 77u);
    EXPECT_EQ(j["samples"], 2u);
    EXPECT_EQ(j["max_abs_error"].get<double>(), r.max_abs_error);
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["results"].size(), 4u);
    EXPECT_FALSE(nlohmann::json::parse(verify_report_json(r, false)).contains("results"));
}
