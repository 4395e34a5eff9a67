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

#include "qwalk/coin.h"

#include <cmath>

#include "qwalk/errors.h"

namespace qwalk {

CoinMatrix make_coin(const CoinParams &params) {
    require_finite(params.alpha, "alpha");
    require_finite(params.beta, "beta");
    require_finite(params.gamma, "gamma");
    const double c = std::cos(params.beta);
    const double s = std::sin(params.beta);
    const complex ea = std::polar(1.0, params.alpha);
    const complex eg = std::polar(1.0, params.gamma);
    return CoinMatrix(ea * c, -std::conj(eg) * s, eg * s, std::conj(ea) * c);
}

}  // namespace qwalk
