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

#ifndef QWALK_COIN_H
#define QWALK_COIN_H

#include <complex>

namespace qwalk {

using complex = std::complex<double>;

/// Coin angles in radians. Stored exactly as given; no reduction modulo 2pi.
struct CoinParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Two-component amplitude over the coin basis {|L>, |R>}.
struct Spinor {
    complex l{};
    complex r{};

    double norm_sq() const {
        return std::norm(l) + std::norm(r);
    }
    bool operator==(const Spinor &) const = default;
};

/// The SU(2) coin
///
///     [ e^{i alpha} cos(beta)   -e^{-i gamma} sin(beta) ]
///     [ e^{i gamma} sin(beta)    e^{-i alpha} cos(beta) ]
///
/// Rows/columns are ordered (L, R).
class CoinMatrix {
   public:
    complex ll() const {
        return ll_;
    }
    complex lr() const {
        return lr_;
    }
    complex rl() const {
        return rl_;
    }
    complex rr() const {
        return rr_;
    }
    complex determinant() const {
        return ll_ * rr_ - lr_ * rl_;
    }

    Spinor apply(const Spinor &s) const {
        return {mul(ll_, s.l) + mul(lr_, s.r), mul(rl_, s.l) + mul(rr_, s.r)};
    }

   private:
    // Textbook product; skips the inf/nan recovery of operator* since all inputs are finite.
    static complex mul(complex a, complex b) {
        return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
    }

    friend CoinMatrix make_coin(const CoinParams &params);
    CoinMatrix(complex ll, complex lr, complex rl, complex rr) : ll_(ll), lr_(lr), rl_(rl), rr_(rr) {
    }

    complex ll_;
    complex lr_;
    complex rl_;
    complex rr_;
};

/// Builds the coin for the given angles. Throws InvalidParameter on non-finite input.
CoinMatrix make_coin(const CoinParams &params);

inline Spinor apply_coin(const CoinMatrix &coin, const Spinor &s) {
    return coin.apply(s);
}

}  // namespace qwalk

#endif
