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

#ifndef QWALK_SWEEP_H
#define QWALK_SWEEP_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/closed_form.h"
#include "qwalk/coin.h"
#include "qwalk/errors.h"
#include "qwalk/walk.h"

namespace qwalk {

enum class AngleUnit { kDegrees, kRadians };

std::string_view unit_suffix(AngleUnit unit);

inline double to_radians(double value, AngleUnit unit) {
    return unit == AngleUnit::kDegrees ? deg_to_rad(value) : value;
}

/// Inclusive grid start, start + step, ..., up to stop, in `unit`.
struct AngleGrid {
    double start = 0.0;
    double stop = 360.0;
    double step = 1.0;
    AngleUnit unit = AngleUnit::kDegrees;

    /// Throws InvalidSpec unless all fields are finite, step > 0 and start <= stop.
    void validate() const;
    size_t size() const;
    /// i-th grid value in the grid's unit; computed as start + i * step (no accumulation).
    double value(size_t i) const;
    double radians(size_t i) const {
        return to_radians(value(i), unit);
    }
    bool operator==(const AngleGrid &) const = default;

    /// Parses "start:stop:step". Throws InvalidSpec on malformed text or a bad grid.
    static AngleGrid parse(std::string_view text, AngleUnit unit);
};

enum class SweepAxis { kPhi, kTheta };

struct SweepSpec {
    SweepAxis axis = SweepAxis::kPhi;
    CoinParams coin;
    /// The swept field is overwritten per grid point.
    InitialStateParams state;
    int64_t steps = 100;
    AngleGrid grid;
};

struct SweepRow {
    /// Swept angle in the table's unit.
    double swept = 0.0;
    double mean = 0.0;
    double predicted = 0.0;
    double abs_error = 0.0;

    bool operator==(const SweepRow &) const = default;
};

struct SweepTable {
    AngleGrid grid;
    std::vector<SweepRow> rows;
    /// Free-form provenance lines, written as '#' comments.
    std::vector<std::string> comments;

    AngleUnit unit() const {
        return grid.unit;
    }
    double max_abs_error() const;
};

/// Sweeps phi with varphi held at spec.state.varphi. Each row carries the
/// simulated mean and the closed-form prediction.
SweepTable run_phase_sweep(const SweepSpec &spec, BaselineCache *cache = nullptr);

/// Sweeps theta with phi and varphi held fixed.
SweepTable run_theta_sweep(const SweepSpec &spec, BaselineCache *cache = nullptr);

SweepTable run_sweep(const SweepSpec &spec, BaselineCache *cache = nullptr);

/// Circular difference in degrees between the argmax rows of `second` and
/// `first`, wrapped into (-180, 180]. Resolution is the grid step. Ties take
/// the first maximum. Throws InvalidArgument if the grids differ.
double peak_shift(const SweepTable &first, const SweepTable &second);

/// Mean over a (phi, varphi) plane at fixed theta and coin.
struct PhasePlaneRow {
    double phi = 0.0;
    double varphi = 0.0;
    double mean = 0.0;
    double predicted = 0.0;
    double abs_error = 0.0;
};

struct PhasePlaneTable {
    AngleGrid grid;
    std::vector<PhasePlaneRow> rows;
    std::vector<std::string> comments;
};

PhasePlaneTable run_phase_plane(
    const CoinParams &coin, double theta, int64_t steps, const AngleGrid &grid, BaselineCache *cache = nullptr);

struct VerifyOptions {
    size_t samples = 200;
    std::vector<int64_t> steps{1, 2, 3, 25, 100};
    double tolerance = 1e-9;
    uint64_t seed = 20160101;
    /// Pinned values (radians) replace the random draw for that angle.
    std::optional<double> theta;
    std::optional<double> phi;
    std::optional<double> varphi;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;
};

struct VerifyEntry {
    size_t sample = 0;
    InitialStateParams state;
    CoinParams coin;
    int64_t steps = 0;
    PredictionResult result;
};

struct VerifyReport {
    uint64_t seed = 0;
    size_t samples = 0;
    double tolerance = 0.0;
    std::vector<int64_t> steps;
    std::vector<VerifyEntry> entries;
    double max_abs_error = 0.0;
    bool pass = false;
};

/// Draws `samples` parameter tuples from a seeded mt19937_64 (theta, phi,
/// varphi, alpha, gamma uniform on [0, 2pi); beta uniform on (0, pi/2)) and
/// checks the closed-form mean against simulation at every step count.
VerifyReport run_verify(const VerifyOptions &options);

/// {seed, samples, tolerance, steps, max_abs_error, pass, results: [...]}
std::string verify_report_json(const VerifyReport &report, bool include_entries = true);

/// Figure reproduction presets (t = 100, coin U(0, pi/4, 0) unless noted).
namespace figures {

inline constexpr int64_t kSteps = 100;

/// Figure 1: mean over the (phi, varphi) plane at theta = pi/4. Default grid 0:360:5.
PhasePlaneTable figure1(std::optional<AngleGrid> grid = std::nullopt);

/// Figure 2: phi sweep at theta = pi/4, varphi = 0. Default grid 0:360:1.
SweepSpec figure2_spec(std::optional<AngleGrid> grid = std::nullopt);

/// Figure 3: the figure-2 sweep under U(52deg, 45deg, 77deg); the reference curve is figure2_spec.
SweepSpec figure3_spec(std::optional<AngleGrid> grid = std::nullopt);

/// Figure 4: theta sweep with phi = pi/2, varphi = 0. Default grid 0:180:1.
SweepSpec figure4_spec(std::optional<AngleGrid> grid = std::nullopt);

}  // namespace figures

}  // namespace qwalk

#endif
