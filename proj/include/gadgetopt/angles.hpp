// Copyright 2026 The gadgetopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <numbers>

namespace gadgetopt {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kAngleTolerance = 1e-12;

/** Reduces an angle into (-pi, pi]. */
inline double normalize_angle(double theta) {
  double r = std::remainder(theta, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

/** True when theta is a multiple of 2*pi, up to kAngleTolerance. */
inline bool is_zero_angle(double theta) {
  return std::abs(normalize_angle(theta)) < kAngleTolerance;
}

}  // namespace gadgetopt
