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

#include "qwalk/walk.h"

#include <cmath>
#include <string>

#include "qwalk/errors.h"

namespace qwalk {

Spinor WalkerState::at(int64_t x) const {
    if (x < -steps_ || x > steps_) {
        return {};
    }
    return amps_[static_cast<size_t>(x + steps_)];
}

double WalkerState::total_probability() const {
    double total = 0.0;
    for (const auto &s : amps_) {
        total += s.norm_sq();
    }
    return total;
}

WalkerState origin_state(const Spinor &origin) {
    require_finite(origin.l.real(), "origin amplitude");
    require_finite(origin.l.imag(), "origin amplitude");
    require_finite(origin.r.real(), "origin amplitude");
    require_finite(origin.r.imag(), "origin amplitude");
    return WalkerState(0, {origin});
}

WalkerState initial_state(const InitialStateParams &p) {
    require_finite(p.theta, "theta");
    require_finite(p.phi, "phi");
    require_finite(p.varphi, "varphi");
    return origin_state(
        {std::polar(1.0, p.phi) * std::cos(p.theta), std::polar(1.0, p.varphi) * std::sin(p.theta)});
}

WalkerState step(const WalkerState &state, const CoinMatrix &coin) {
    const auto &src = state.amps_;
    std::vector<Spinor> dst(src.size() + 2);
    // Source index i (position i - t) maps to destination index i + 1 at the
    // same position; L lands one to the left, R one to the right.
    for (size_t i = 0; i < src.size(); ++i) {
        Spinor c = coin.apply(src[i]);
        dst[i].l = c.l;
        dst[i + 2].r = c.r;
    }
    return WalkerState(state.steps_ + 1, std::move(dst));
}

WalkerState evolve(WalkerState state, const CoinMatrix &coin, int64_t steps, int64_t max_steps) {
    if (steps < 0) {
        throw InvalidParameter("step count must be non-negative, got " + std::to_string(steps));
    }
    if (state.steps() + steps > max_steps) {
        throw InvalidParameter(
            "step count " + std::to_string(state.steps() + steps) + " exceeds maximum " + std::to_string(max_steps));
    }
    for (int64_t k = 0; k < steps; ++k) {
        state = step(state, coin);
    }
    return state;
}

WalkerState evolve(const InitialStateParams &p, const CoinParams &c, int64_t steps, int64_t max_steps) {
    if (steps < 0) {
        throw InvalidParameter("step count must be non-negative, got " + std::to_string(steps));
    }
    return evolve(initial_state(p), make_coin(c), steps, max_steps);
}

}  // namespace qwalk
