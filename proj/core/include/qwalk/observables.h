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

#ifndef QWALK_OBSERVABLES_H
#define QWALK_OBSERVABLES_H

#include <cstdint>
#include <vector>

#include "qwalk/walk.h"

namespace qwalk {

/// Per-site probabilities of finding the walker at (x, L) and (x, R).
/// Index i corresponds to position i - t.
struct Distribution {
    int64_t steps = 0;
    std::vector<double> pl;
    std::vector<double> pr;

    double left(int64_t x) const;
    double right(int64_t x) const;
    double at(int64_t x) const {
        return left(x) + right(x);
    }
    double total() const;
};

Distribution distribution(const WalkerState &s);

/// First moment sum_x x (pl[x] + pr[x]), summed in index order.
double mean_position(const Distribution &d);

/// Coin-resolved distributions of the two basis walks |0L> and |0R> under U(0, beta, 0).
struct BasisDistributions {
    double beta = 0.0;
    Distribution from_left;
    Distribution from_right;

    double left_from_left(int64_t x) const {
        return from_left.left(x);
    }
    double right_from_left(int64_t x) const {
        return from_left.right(x);
    }
    double left_from_right(int64_t x) const {
        return from_right.left(x);
    }
    double right_from_right(int64_t x) const {
        return from_right.right(x);
    }
};

BasisDistributions basis_distributions(double beta, int64_t steps);

}  // namespace qwalk

#endif
