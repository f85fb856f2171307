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

#include "oneconvex/bounds.h"

#include <cmath>
#include <numbers>

namespace oneconvex {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must satisfy 0 < alpha < 1");
  }
}

void check_dim(int d) {
  if (d < 1 || d > kMaxDimension) throw DomainError("dimension out of range");
}

// Validates p for the new bound (0 <= r < 1).
void check_f_params(const BoundParams& p) {
  check_dim(p.dim);
  check_alpha(p.alpha);
  if (!(p.inner_radius >= 0.0 && p.inner_radius < 1.0)) {
    throw DomainError("inner radius must satisfy 0 <= r < 1");
  }
}

// Validates p for the prior bound (0 < r < 1).
void check_g_params(const BoundParams& p) {
  check_dim(p.dim);
  check_alpha(p.alpha);
  if (!(p.inner_radius > 0.0 && p.inner_radius < 1.0)) {
    throw DomainError("the prior bound requires 0 < r < 1");
  }
}

Log2Value from_ln(double ln_value) { return {ln_value / kLn2}; }

// 1 - r^2 without cancellation near r = 1.
double one_minus_square(double r) { return (1.0 - r) * (1.0 + r); }

// ln(sqrt(1 + e^L) + 1), stable for any L.
double ln_sqrt_one_plus_exp_plus_one(double ln_y) {
  if (ln_y <= 0.0) return std::log(std::sqrt(1.0 + std::exp(ln_y)) + 1.0);
  // sqrt(1 + y) + 1 = sqrt(y) (sqrt(1 + 1/y) + 1/sqrt(y)).
  return 0.5 * ln_y +
         std::log(std::sqrt(1.0 + std::exp(-ln_y)) + std::exp(-0.5 * ln_y));
}

// sqrt(1 + 2 alpha) - 1.
double critical_factor(double alpha) {
  return std::expm1(0.5 * std::log1p(2.0 * alpha));
}

}  // namespace

double Log2Value::value() const { return std::exp2(log2); }

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::kSupercritical:
      return "SUPERCRITICAL";
    case Regime::kCritical:
      return "CRITICAL";
    case Regime::kSubcritical:
      return "SUBCRITICAL";
  }
  return "UNKNOWN";
}

double bound_f_squared(const BoundParams& p) {
  check_f_params(p);
  // ldexp scales by 2^d exactly.
  return std::ldexp(p.alpha * one_minus_pow(p.inner_radius, p.dim), p.dim);
}

Log2Value bound_f(const BoundParams& p) {
  check_f_params(p);
  const double omr = one_minus_pow(p.inner_radius, p.dim);
  return {0.5 * (std::log2(p.alpha) + p.dim + std::log2(omr))};
}

std::optional<std::int64_t> largest_admissible_n(const BoundParams& p) {
  const double f2 = bound_f_squared(p);
  // Above 2^62, n would exceed 2^31.
  constexpr double kMaxSquare = 0x1p62;
  if (!(f2 <= kMaxSquare)) return std::nullopt;
  // n^2 < f2  <=>  n^2 < ceil(f2) for integer n; ceil(f2) is exact in int64.
  const auto limit = static_cast<std::int64_t>(std::ceil(f2));
  auto admissible = [limit](std::int64_t n) { return n * n < limit; };
  auto n = static_cast<std::int64_t>(std::floor(std::sqrt(f2)));
  while (n > 0 && !admissible(n)) --n;
  while (admissible(n + 1)) ++n;
  if (n < 1) return std::nullopt;
  return n;
}

Log2Value bound_g(const BoundParams& p) {
  check_g_params(p);
  const double r = p.inner_radius;
  const double d = p.dim;
  const double ln_r = std::log(r);
  // x = sqrt(1 - r^2) / r^2; y = 2 alpha x^d.
  const double ln_x = 0.5 * std::log(one_minus_square(r)) - 2.0 * ln_r;
  const double ln_two_alpha = std::log(2.0 * p.alpha);
  const double ln_y = ln_two_alpha + d * ln_x;
  return from_ln(ln_two_alpha - d * ln_r - ln_sqrt_one_plus_exp_plus_one(ln_y));
}

double bound_g_direct(const BoundParams& p) {
  check_g_params(p);
  const double r = p.inner_radius;
  const double d = p.dim;
  const double s = one_minus_square(r);
  const double lead = std::pow(r / std::sqrt(s), d);
  // e = 2 alpha (sqrt(1 - r^2) / r^2)^d as a single power.
  const double e = 2.0 * p.alpha * std::pow(std::sqrt(s) / (r * r), d);
  // sqrt(1 + e) - 1 without cancellation for small e.
  const double root_minus_one = std::expm1(0.5 * std::log1p(e));
  return lead * root_minus_one;
}

ProbLowerBound prob_lower_bound(std::int64_t n, const LayerConfig& cfg) {
  if (n < 1) throw DomainError("point count must be at least 1");
  const double nd = static_cast<double>(n);
  const double denom = cfg.one_minus_inner_pow();
  ProbLowerBound out;
  out.sharp = 1.0 - std::ldexp(nd * (nd - 1.0), -cfg.dim()) / denom;
  out.simplified = 1.0 - std::ldexp(nd * nd, -cfg.dim()) / denom;
  out.vacuous = !(out.sharp > 0.0);
  return out;
}

RegimeClass classify_regime(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("regime classification requires 0 < r < 1");
  }
  if (std::abs(r - kCriticalRadius) <= kCriticalRadiusTol) {
    return {Regime::kCritical};
  }
  return {r > kCriticalRadius ? Regime::kSupercritical : Regime::kSubcritical};
}

Log2Value asymptotic_g(const BoundParams& p) {
  check_g_params(p);
  const double r = p.inner_radius;
  const double d = p.dim;
  switch (classify_regime(r).regime) {
    case Regime::kSupercritical:
      return from_ln(std::log(p.alpha) - d * std::log(r));
    case Regime::kCritical:
      return from_ln(std::log(critical_factor(p.alpha)) - d * std::log(r));
    case Regime::kSubcritical:
      return from_ln(0.5 * std::log(2.0 * p.alpha) -
                     0.25 * d * std::log(one_minus_square(r)));
  }
  throw DomainError("unreachable regime");
}

Log2Value ratio_f_over_g(const BoundParams& p) {
  check_g_params(p);
  return bound_f(p) / bound_g(p);
}

Log2Value asymptotic_ratio_f_over_g(const BoundParams& p) {
  check_g_params(p);
  const double r = p.inner_radius;
  const double d = p.dim;
  const double ln_alpha = std::log(p.alpha);
  switch (classify_regime(r).regime) {
    case Regime::kSupercritical:
      return from_ln(-0.5 * ln_alpha + d * (std::log(r) + 0.5 * kLn2));
    case Regime::kCritical: {
      const double lead = (critical_factor(p.alpha) + 2.0) /
                          (2.0 * std::sqrt(p.alpha));
      return from_ln(std::log(lead) +
                     0.5 * d * std::log(std::sqrt(5.0) - 1.0));
    }
    case Regime::kSubcritical:
      return from_ln(0.5 * d * (kLn2 + 0.5 * std::log(one_minus_square(r))) -
                     0.5 * kLn2);
  }
  throw DomainError("unreachable regime");
}

}  // namespace oneconvex
