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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"
#include "qwalk/csv.h"
#include "qwalk/errors.h"

namespace qwalk {

std::string_view unit_suffix(AngleUnit unit) {
    return unit == AngleUnit::kDegrees ? "deg" : "rad";
}

void AngleGrid::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw InvalidSpec("grid values must be finite");
    }
    if (!(step > 0.0)) {
        throw InvalidSpec("grid step must be positive");
    }
    if (start > stop) {
        throw InvalidSpec("grid start must not exceed stop");
    }
}

size_t AngleGrid::size() const {
    validate();
    // Slack so that e.g. 0:360:0.1 includes 360.
    double intervals = (stop - start) / step;
    return static_cast<size_t>(std::floor(intervals * (1.0 + 1e-12) + 1e-9)) + 1;
}

double AngleGrid::value(size_t i) const {
    return start + static_cast<double>(i) * step;
}

AngleGrid AngleGrid::parse(std::string_view text, AngleUnit unit) {
    double parts[3];
    size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        size_t end = k < 2 ? text.find(':', pos) : text.size();
        if (end == std::string_view::npos) {
            throw InvalidSpec("grid must be start:stop:step, got '" + std::string(text) + "'");
        }
        std::string_view field = text.substr(pos, end - pos);
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), parts[k]);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            throw InvalidSpec("bad number '" + std::string(field) + "' in grid '" + std::string(text) + "'");
        }
        pos = end + 1;
    }
    AngleGrid grid{parts[0], parts[1], parts[2], unit};
    grid.validate();
    return grid;
}

double SweepTable::max_abs_error() const {
    double m = 0.0;
    for (const auto &row : rows) {
        m = std::max(m, row.abs_error);
    }
    return m;
}

namespace {

std::string angle_comment(std::string_view name, double radians, AngleUnit unit) {
    double shown = unit == AngleUnit::kDegrees ? rad_to_deg(radians) : radians;
    return std::string(name) + "=" + format_double(shown) + " " + std::string(unit_suffix(unit));
}

std::vector<std::string> provenance(const SweepSpec &spec, std::string_view swept, const Baseline &b) {
    const AngleUnit u = spec.grid.unit;
    std::vector<std::string> out;
    out.push_back(std::string("mode=") + (spec.axis == SweepAxis::kPhi ? "phase-sweep" : "theta-sweep"));
    out.push_back("swept=" + std::string(swept));
    out.push_back("unit=" + std::string(unit_suffix(u)));
    out.push_back(
        "grid=" + format_double(spec.grid.start) + ":" + format_double(spec.grid.stop) + ":" +
        format_double(spec.grid.step));
    out.push_back(
        "coin " + angle_comment("alpha", spec.coin.alpha, u) + " " + angle_comment("beta", spec.coin.beta, u) + " " +
        angle_comment("gamma", spec.coin.gamma, u));
    std::string state = "state";
    if (spec.axis != SweepAxis::kTheta) {
        state += " " + angle_comment("theta", spec.state.theta, u);
    }
    if (spec.axis != SweepAxis::kPhi) {
        state += " " + angle_comment("phi", spec.state.phi, u);
    }
    state += " " + angle_comment("varphi", spec.state.varphi, u);
    out.push_back(state);
    out.push_back("steps=" + std::to_string(spec.steps));
    out.push_back("baseline a=" + format_double(b.a) + " b0=" + format_double(b.b0));
    return out;
}

template <typename SetAngle>
SweepTable run_axis_sweep(const SweepSpec &spec, BaselineCache *cache, std::string_view swept, SetAngle set_angle) {
    spec.grid.validate();
    if (spec.steps < 0) {
        throw InvalidSpec("steps must be non-negative");
    }
    make_coin(spec.coin);
    BaselineCache local;
    BaselineCache &baselines = cache != nullptr ? *cache : local;
    const Baseline baseline = baselines.get(spec.coin.beta, spec.steps);

    SweepTable table;
    table.grid = spec.grid;
    table.comments = provenance(spec, swept, baseline);
    const size_t n = spec.grid.size();
    table.rows.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        InitialStateParams state = spec.state;
        set_angle(state, spec.grid.radians(i));
        SweepRow row;
        row.swept = spec.grid.value(i);
        row.mean = simulate_mean(state, spec.coin, spec.steps);
        row.predicted = predict_mean(state, spec.coin, baseline);
        row.abs_error = std::abs(row.mean - row.predicted);
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace

SweepTable run_phase_sweep(const SweepSpec &spec, BaselineCache *cache) {
    if (spec.axis != SweepAxis::kPhi) {
        throw InvalidSpec("phase sweep requires the phi axis");
    }
    return run_axis_sweep(spec, cache, "phi", [](InitialStateParams &s, double v) {
        s.phi = v;
    });
}

SweepTable run_theta_sweep(const SweepSpec &spec, BaselineCache *cache) {
    if (spec.axis != SweepAxis::kTheta) {
        throw InvalidSpec("theta sweep requires the theta axis");
    }
    return run_axis_sweep(spec, cache, "theta", [](InitialStateParams &s, double v) {
        s.theta = v;
    });
}

SweepTable run_sweep(const SweepSpec &spec, BaselineCache *cache) {
    return spec.axis == SweepAxis::kPhi ? run_phase_sweep(spec, cache) : run_theta_sweep(spec, cache);
}

namespace {

size_t argmax(const SweepTable &t) {
    size_t best = 0;
    for (size_t i = 1; i < t.rows.size(); ++i) {
        if (t.rows[i].mean > t.rows[best].mean) {
            best = i;
        }
    }
    return best;
}

}  // namespace

double peak_shift(const SweepTable &first, const SweepTable &second) {
    if (!(first.grid == second.grid) || first.rows.size() != second.rows.size()) {
        throw InvalidArgument("peak_shift requires tables on identical grids");
    }
    if (first.rows.empty()) {
        throw InvalidArgument("peak_shift requires non-empty tables");
    }
    for (size_t i = 0; i < first.rows.size(); ++i) {
        if (first.rows[i].swept != second.rows[i].swept) {
            throw InvalidArgument("peak_shift requires tables on identical grids");
        }
    }
    // Work in grid steps so the result is an exact multiple of the resolution.
    const auto index_diff = static_cast<double>(static_cast<int64_t>(argmax(second)) - static_cast<int64_t>(argmax(first)));
    const double step_deg = first.unit() == AngleUnit::kDegrees ? first.grid.step : rad_to_deg(first.grid.step);
    double shift = std::fmod(index_diff * step_deg, 360.0);
    if (shift <= -180.0) {
        shift += 360.0;
    } else if (shift > 180.0) {
        shift -= 360.0;
    }
    return shift;
}

PhasePlaneTable run_phase_plane(
    const CoinParams &coin, double theta, int64_t steps, const AngleGrid &grid, BaselineCache *cache) {
    grid.validate();
    BaselineCache local;
    BaselineCache &baselines = cache != nullptr ? *cache : local;
    const Baseline baseline = baselines.get(coin.beta, steps);
    const AngleUnit u = grid.unit;

    PhasePlaneTable table;
    table.grid = grid;
    table.comments = {
        "mode=phase-plane",
        "unit=" + std::string(unit_suffix(u)),
        "grid=" + format_double(grid.start) + ":" + format_double(grid.stop) + ":" + format_double(grid.step),
        "coin " + angle_comment("alpha", coin.alpha, u) + " " + angle_comment("beta", coin.beta, u) + " " +
            angle_comment("gamma", coin.gamma, u),
        "state " + angle_comment("theta", theta, u),
        "steps=" + std::to_string(steps),
        "baseline a=" + format_double(baseline.a) + " b0=" + format_double(baseline.b0),
    };
    const size_t n = grid.size();
    table.rows.reserve(n * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            InitialStateParams state{theta, grid.radians(i), grid.radians(j)};
            PhasePlaneRow row;
            row.phi = grid.value(i);
            row.varphi = grid.value(j);
            row.mean = simulate_mean(state, coin, steps);
            row.predicted = predict_mean(state, coin, baseline);
            row.abs_error = std::abs(row.mean - row.predicted);
            table.rows.push_back(row);
        }
    }
    return table;
}

VerifyReport run_verify(const VerifyOptions &options) {
    if (options.samples < 1) {
        throw InvalidParameter("verify needs at least one sample");
    }
    if (!(options.tolerance > 0.0)) {
        throw InvalidParameter("tolerance must be positive");
    }
    for (int64_t t : options.steps) {
        if (t < 0) {
            throw InvalidParameter("step counts must be non-negative");
        }
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> full_turn(0.0, kTwoPi);
    std::uniform_real_distribution<double> quarter_turn(std::nextafter(0.0, 1.0), kPi / 2);

    VerifyReport report;
    report.seed = options.seed;
    report.samples = options.samples;
    report.tolerance = options.tolerance;
    report.steps = options.steps;
    report.pass = true;
    for (size_t s = 0; s < options.samples; ++s) {
        // Always draw all six so pinning one angle leaves the others unchanged.
        const double theta = full_turn(rng);
        const double phi = full_turn(rng);
        const double varphi = full_turn(rng);
        const double alpha = full_turn(rng);
        const double beta = quarter_turn(rng);
        const double gamma = full_turn(rng);
        InitialStateParams state{
            options.theta.value_or(theta), options.phi.value_or(phi), options.varphi.value_or(varphi)};
        CoinParams coin{options.alpha.value_or(alpha), options.beta.value_or(beta), options.gamma.value_or(gamma)};
        for (int64_t t : options.steps) {
            VerifyEntry e{s, state, coin, t, verify_decomposition(state, coin, t, options.tolerance)};
            report.max_abs_error = std::max(report.max_abs_error, e.result.abs_error);
            report.pass = report.pass && e.result.within_tolerance;
            report.entries.push_back(e);
        }
    }
    return report;
}

std::string verify_report_json(const VerifyReport &report, bool include_entries) {
    nlohmann::ordered_json j;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    j["tolerance"] = report.tolerance;
    j["steps"] = report.steps;
    j["max_abs_error"] = report.max_abs_error;
    j["pass"] = report.pass;
    if (include_entries) {
        auto results = nlohmann::ordered_json::array();
        for (const auto &e : report.entries) {
            results.push_back({
                {"sample", e.sample},
                {"theta", e.state.theta},
                {"phi", e.state.phi},
                {"varphi", e.state.varphi},
                {"alpha", e.coin.alpha},
                {"beta", e.coin.beta},
                {"gamma", e.coin.gamma},
                {"steps", e.steps},
                {"predicted", e.result.predicted},
                {"simulated", e.result.simulated},
                {"abs_error", e.result.abs_error},
                {"pass", e.result.within_tolerance},
            });
        }
        j["results"] = std::move(results);
    }
    return j.dump(2);
}

namespace figures {

namespace {

const CoinParams kHadamard{0.0, kPi / 4, 0.0};

}  // namespace

PhasePlaneTable figure1(std::optional<AngleGrid> grid) {
    return run_phase_plane(kHadamard, kPi / 4, kSteps, grid.value_or(AngleGrid{0.0, 360.0, 5.0, AngleUnit::kDegrees}));
}

SweepSpec figure2_spec(std::optional<AngleGrid> grid) {
    SweepSpec spec;
    spec.axis = SweepAxis::kPhi;
    spec.coin = kHadamard;
    spec.state = InitialStateParams{kPi / 4, 0.0, 0.0};
    spec.steps = kSteps;
    spec.grid = grid.value_or(AngleGrid{0.0, 360.0, 1.0, AngleUnit::kDegrees});
    return spec;
}

SweepSpec figure3_spec(std::optional<AngleGrid> grid) {
    SweepSpec spec = figure2_spec(grid);
    spec.coin = CoinParams{deg_to_rad(52.0), deg_to_rad(45.0), deg_to_rad(77.0)};
    return spec;
}

SweepSpec figure4_spec(std::optional<AngleGrid> grid) {
    SweepSpec spec;
    spec.axis = SweepAxis::kTheta;
    spec.coin = kHadamard;
    spec.state = InitialStateParams{0.0, kPi / 2, 0.0};
    spec.steps = kSteps;
    spec.grid = grid.value_or(AngleGrid{0.0, 180.0, 1.0, AngleUnit::kDegrees});
    return spec;
}

}  // namespace figures

}  // namespace qwalk
