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

#ifndef QWALK_ERRORS_H
#define QWALK_ERRORS_H

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

/// Raised when a numeric input (angle, step count, tolerance) is outside its domain.
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when two otherwise-valid arguments are inconsistent with each other.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised for malformed sweep specifications (bad grid, unknown axis).
struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void require_finite(double value, const char *name) {
    if (!std::isfinite(value)) {
        throw InvalidParameter(std::string(name) + " must be finite");
    }
}

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double deg_to_rad(double deg) {
    return deg * (kPi / 180.0);
}

inline constexpr double rad_to_deg(double rad) {
    return rad * (180.0 / kPi);
}

}  // namespace qwalk

#endif
