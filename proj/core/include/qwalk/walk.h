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

#ifndef QWALK_WALK_H
#define QWALK_WALK_H

#include <cstdint>
#include <span>
#include <vector>

#include "qwalk/coin.h"

namespace qwalk {

/// Angles (radians) of the initial spinor cos(theta) e^{i phi}|0L> + sin(theta) e^{i varphi}|0R>.
struct InitialStateParams {
    double theta = 0.0;
    double phi = 0.0;
    double varphi = 0.0;
};

inline constexpr int64_t kDefaultMaxSteps = 1'000'000;

/// Amplitude field after `steps()` coin+shift applications.
///
/// Storage is dense over x in [-t, t]; index i holds position i - t. Sites with
/// (x + t) odd are never written and stay exactly zero.
class WalkerState {
   public:
    int64_t steps() const {
        return steps_;
    }
    std::span<const Spinor> amplitudes() const {
        return amps_;
    }
    size_t num_sites() const {
        return amps_.size();
    }
    int64_t min_position() const {
        return -steps_;
    }
    int64_t max_position() const {
        return steps_;
    }

    /// Amplitude at lattice position x; zero spinor outside [-t, t].
    Spinor at(int64_t x) const;

    double total_probability() const;

    bool operator==(const WalkerState &) const = default;

   private:
    friend WalkerState origin_state(const Spinor &origin);
    friend WalkerState step(const WalkerState &state, const CoinMatrix &coin);
    WalkerState(int64_t steps, std::vector<Spinor> amps) : steps_(steps), amps_(std::move(amps)) {
    }

    int64_t steps_;
    std::vector<Spinor> amps_;
};

/// t = 0 state carrying `origin` at x = 0. Throws InvalidParameter on non-finite components.
WalkerState origin_state(const Spinor &origin);

WalkerState initial_state(const InitialStateParams &p);

/// Exact basis and symmetric origin spinors (no trig round-off in the zero entries).
inline constexpr Spinor kLeftSpinor{1.0, 0.0};
inline constexpr Spinor kRightSpinor{0.0, 1.0};
inline constexpr Spinor kSymmetricSpinor{0.70710678118654752440, 0.70710678118654752440};

/// One coin-then-shift step: L components move to x-1, R components to x+1.
WalkerState step(const WalkerState &state, const CoinMatrix &coin);

/// Applies `steps` steps of the coin U(c) to initial_state(p).
///
/// Throws InvalidParameter if steps < 0, steps > max_steps, or any angle is non-finite.
WalkerState evolve(
    const InitialStateParams &p, const CoinParams &c, int64_t steps, int64_t max_steps = kDefaultMaxSteps);

/// Same as above with a prebuilt coin and an arbitrary starting state.
WalkerState evolve(WalkerState state, const CoinMatrix &coin, int64_t steps, int64_t max_steps = kDefaultMaxSteps);

}  // namespace qwalk

#endif
