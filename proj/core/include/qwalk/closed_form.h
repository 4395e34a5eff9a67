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

#ifndef QWALK_CLOSED_FORM_H
#define QWALK_CLOSED_FORM_H

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

#include "qwalk/coin.h"
#include "qwalk/walk.h"

namespace qwalk {

/// The two reference means that determine the mean position of every walk
/// with coin mixing angle `beta` after `steps` steps:
///
///   a  = mean of the walk from |0L> under U(0, beta, 0)
///   b0 = mean of the walk from (|0L> + |0R>)/sqrt(2) under U(0, beta, 0)
///
/// Any other initial spinor and coin phases give
///
///   mean = cos(2 theta) a + sin(2 theta) cos(alpha + gamma + phi - varphi) b0.
struct Baseline {
    double beta = 0.0;
    int64_t steps = 0;
    double a = 0.0;
    double b0 = 0.0;
};

Baseline compute_baseline(double beta, int64_t steps);

/// Closed-form mean position. Throws InvalidArgument if the baseline was built
/// for a different beta (compared modulo 2pi).
double predict_mean(const InitialStateParams &p, const CoinParams &c, const Baseline &b);

/// Simulated mean position of the full walk.
double simulate_mean(const InitialStateParams &p, const CoinParams &c, int64_t steps);

struct PredictionResult {
    double predicted = 0.0;
    double simulated = 0.0;
    double abs_error = 0.0;
    /// abs_error <= tol * max(1, |simulated|)
    bool within_tolerance = false;
};

PredictionResult verify_decomposition(
    const InitialStateParams &p, const CoinParams &c, int64_t steps, double tol);

/// Same, reusing a baseline the caller already holds.
PredictionResult verify_decomposition(
    const InitialStateParams &p, const CoinParams &c, const Baseline &b, double tol);

/// A cos(2 theta) + B sin(2 theta) written as amplitude * cos(2 theta - omega),
/// with cos(omega) = A / amplitude and sin(omega) = B / amplitude.
struct PhaseForm {
    double a = 0.0;
    double b = 0.0;
    double amplitude = 0.0;
    double omega = 0.0;

    double evaluate(double theta) const;
};

PhaseForm phase_form(const Baseline &b, const CoinParams &c, double phi, double varphi);

/// Memoizes compute_baseline per (beta, steps). Safe for concurrent use.
class BaselineCache {
   public:
    Baseline get(double beta, int64_t steps);
    size_t size() const;

   private:
    mutable std::mutex mu_;
    std::map<std::pair<double, int64_t>, Baseline> entries_;
};

}  // namespace qwalk

#endif
