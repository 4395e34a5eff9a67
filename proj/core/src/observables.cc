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

#include "qwalk/observables.h"

#include "qwalk/errors.h"

namespace qwalk {

namespace {

double lookup(const std::vector<double> &v, int64_t steps, int64_t x) {
    if (x < -steps || x > steps) {
        return 0.0;
    }
    return v[static_cast<size_t>(x + steps)];
}

}  // namespace

double Distribution::left(int64_t x) const {
    return lookup(pl, steps, x);
}

double Distribution::right(int64_t x) const {
    return lookup(pr, steps, x);
}

double Distribution::total() const {
    double sum = 0.0;
    for (size_t i = 0; i < pl.size(); ++i) {
        sum += pl[i] + pr[i];
    }
    return sum;
}

Distribution distribution(const WalkerState &s) {
    Distribution d;
    d.steps = s.steps();
    d.pl.reserve(s.num_sites());
    d.pr.reserve(s.num_sites());
    for (const auto &amp : s.amplitudes()) {
        d.pl.push_back(std::norm(amp.l));
        d.pr.push_back(std::norm(amp.r));
    }
    return d;
}

double mean_position(const Distribution &d) {
    double sum = 0.0;
    for (size_t i = 0; i < d.pl.size(); ++i) {
        auto x = static_cast<double>(static_cast<int64_t>(i) - d.steps);
        sum += x * (d.pl[i] + d.pr[i]);
    }
    return sum;
}

BasisDistributions basis_distributions(double beta, int64_t steps) {
    const CoinMatrix coin = make_coin(CoinParams{0.0, beta, 0.0});
    return BasisDistributions{
        beta,
        distribution(evolve(origin_state(kLeftSpinor), coin, steps)),
        distribution(evolve(origin_state(kRightSpinor), coin, steps)),
    };
}

}  // namespace qwalk
