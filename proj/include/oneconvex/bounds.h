// Copyright 2026 The oneconvex Authors.
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

#ifndef ONECONVEX_BOUNDS_H_
#define ONECONVEX_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "oneconvex/geometry.h"

namespace oneconvex {

// Parameters shared by every bound: dimension d, inner radius r, and the
// failure probability alpha.
struct BoundParams {
  int dim = 1;
  double inner_radius = 0.0;
  double alpha = 0.05;
};

// A positive quantity carried by its base-2 logarithm.
struct Log2Value {
  double log2 = 0.0;

  // 2^log2; may be +inf or 0 when out of range.
  double value() const;
  friend Log2Value operator/(Log2Value a, Log2Value b) {
    return {a.log2 - b.log2};
  }
};

// The critical radius sqrt((sqrt(5) - 1) / 2), the root in (0, 1) of
// r^4 + r^2 - 1 = 0.
inline constexpr double kCriticalRadius = 0.78615137775742328606955858584;
// Radii within this distance of kCriticalRadius classify as critical.
inline constexpr double kCriticalRadiusTol = 1e-12;

enum class Regime { kSupercritical, kCritical, kSubcritical };

struct RegimeClass {
  Regime regime;
  double r_star = kCriticalRadius;
};

std::string_view regime_name(Regime regime);

// sqrt(alpha * 2^d * (1 - r^d)), for 0 <= r < 1.
Log2Value bound_f(const BoundParams& p);
// alpha * 2^d * (1 - r^d) as a double (+inf when 2^d overflows).
double bound_f_squared(const BoundParams& p);

// The largest integer n with n^2 < alpha 2^d (1 - r^d), i.e. strictly below
// bound_f. Empty when that integer would be 0, or when it does not fit.
std::optional<std::int64_t> largest_admissible_n(const BoundParams& p);

// The prior bound
//   g = (r / sqrt(1 - r^2))^d (sqrt(1 + 2 alpha (1 - r^2)^(d/2) / r^(2d)) - 1)
// evaluated in the rationalized form
//   g = 2 alpha / (r^d (sqrt(1 + 2 alpha (sqrt(1 - r^2) / r^2)^d) + 1))
// entirely in log space. Requires 0 < r < 1.
Log2Value bound_g(const BoundParams& p);

// The same bound in its original (unrationalized) form, evaluated directly
// in double precision. The sqrt(1 + e) - 1 factor goes through log1p/expm1.
// Returns +inf or 0 when an intermediate leaves the double range.
double bound_g_direct(const BoundParams& p);

// Union-bound guarantee on P(n points are 1-convex):
//   sharp      = 1 - n (n - 1) / (2^d (1 - r^d))
//   simplified = 1 - n^2 / (2^d (1 - r^d))
// Unclamped; `vacuous` is set when the sharp form is not positive.
struct ProbLowerBound {
  double sharp = 1.0;
  double simplified = 1.0;
  bool vacuous = false;
};
ProbLowerBound prob_lower_bound(std::int64_t n, const LayerConfig& cfg);

RegimeClass classify_regime(double r);

// Leading-order behaviour of g as d grows with r and alpha fixed:
//   supercritical  alpha / r^d
//   critical       (sqrt(1 + 2 alpha) - 1) / r^d
//   subcritical    sqrt(2 alpha) / (1 - r^2)^(d/4)
Log2Value asymptotic_g(const BoundParams& p);

// f / g computed from the exact expressions.
Log2Value ratio_f_over_g(const BoundParams& p);

// Leading-order behaviour of f / g:
//   supercritical  (r sqrt 2)^d / sqrt(alpha)
//   critical       (sqrt(1 + 2 alpha) + 1) / (2 sqrt(alpha)) (sqrt(5) - 1)^(d/2)
//   subcritical    (2 sqrt(1 - r^2))^(d/2) / sqrt(2)
Log2Value asymptotic_ratio_f_over_g(const BoundParams& p);

}  // namespace oneconvex

#endif  // ONECONVEX_BOUNDS_H_
