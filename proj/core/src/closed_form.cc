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

#include "qwalk/closed_form.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/errors.h"
#include "qwalk/observables.h"

namespace qwalk {

namespace {

constexpr double kBetaMatchTolerance = 1e-12;

void require_same_beta(double baseline_beta, double coin_beta) {
    double diff = std::remainder(baseline_beta - coin_beta, kTwoPi);
    if (!(std::abs(diff) <= kBetaMatchTolerance)) {
        throw InvalidArgument(
            "baseline beta " + std::to_string(baseline_beta) + " does not match coin beta " + std::to_string(coin_beta));
    }
}

double phase_factor(const InitialStateParams &p, const CoinParams &c) {
    return std::cos(c.alpha + c.gamma + (p.phi - p.varphi));
}

}  // namespace

Baseline compute_baseline(double beta, int64_t steps) {
    const CoinMatrix coin = make_coin(CoinParams{0.0, beta, 0.0});
    const double a = mean_position(distribution(evolve(origin_state(kLeftSpinor), coin, steps)));
    const double b0 = mean_position(distribution(evolve(origin_state(kSymmetricSpinor), coin, steps)));
    return Baseline{beta, steps, a, b0};
}

double predict_mean(const InitialStateParams &p, const CoinParams &c, const Baseline &b) {
    require_same_beta(b.beta, c.beta);
    return std::cos(2.0 * p.theta) * b.a + std::sin(2.0 * p.theta) * phase_factor(p, c) * b.b0;
}

double simulate_mean(const InitialStateParams &p, const CoinParams &c, int64_t steps) {
    return mean_position(distribution(evolve(p, c, steps)));
}

PredictionResult verify_decomposition(
    const InitialStateParams &p, const CoinParams &c, const Baseline &b, double tol) {
    if (!(tol > 0.0)) {
        throw InvalidParameter("tolerance must be positive");
    }
    PredictionResult r;
    r.predicted = predict_mean(p, c, b);
    r.simulated = simulate_mean(p, c, b.steps);
    r.abs_error = std::abs(r.predicted - r.simulated);
    r.within_tolerance = r.abs_error <= tol * std::max(1.0, std::abs(r.simulated));
    return r;
}

PredictionResult verify_decomposition(
    const InitialStateParams &p, const CoinParams &c, int64_t steps, double tol) {
    return verify_decomposition(p, c, compute_baseline(c.beta, steps), tol);
}

double PhaseForm::evaluate(double theta) const {
    return amplitude * std::cos(2.0 * theta - omega);
}

PhaseForm phase_form(const Baseline &b, const CoinParams &c, double phi, double varphi) {
    require_same_beta(b.beta, c.beta);
    PhaseForm f;
    f.a = b.a;
    f.b = phase_factor(InitialStateParams{0.0, phi, varphi}, c) * b.b0;
    f.amplitude = std::hypot(f.a, f.b);
    f.omega = f.amplitude == 0.0 ? 0.0 : std::atan2(f.b, f.a);
    return f;
}

Baseline BaselineCache::get(double beta, int64_t steps) {
    const auto key = std::make_pair(beta, steps);
    {
        std::lock_guard lock(mu_);
        if (auto it = entries_.find(key); it != entries_.end()) {
            return it->second;
        }
    }
    Baseline b = compute_baseline(beta, steps);
    std::lock_guard lock(mu_);
    return entries_.emplace(key, b).first->second;
}

size_t BaselineCache::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

}  // namespace qwalk
