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

#include "oneconvex/stats.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "oneconvex/geometry.h"

namespace oneconvex {

ProportionInterval wilson_interval(std::int64_t successes, std::int64_t trials,
                                   double z) {
  if (trials < 1 || successes < 0 || successes > trials) {
    throw DomainError("wilson_interval needs 0 <= successes <= trials, trials >= 1");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double scale = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / scale;
  const double half =
      z / scale * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  ProportionInterval ci{std::clamp(center - half, 0.0, 1.0),
                        std::clamp(center + half, 0.0, 1.0)};
  if (successes == trials) ci.high = 1.0;
  if (successes == 0) ci.low = 0.0;
  ci.low = std::min(ci.low, p);
  ci.high = std::max(ci.high, p);
  return ci;
}

double ks_statistic(std::span<const double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic needs a nonempty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(i + 1) / n;
    worst = std::max({worst, f - below, above - f});
  }
  return worst;
}

double kolmogorov_survival(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 1.0) {
    // P(K <= x) = sqrt(2 pi) / x * sum_k exp(-(2k - 1)^2 pi^2 / (8 x^2)).
    const double c = std::numbers::pi * std::numbers::pi / (8.0 * x * x);
    double sum = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double odd = 2.0 * k - 1.0;
      sum += std::exp(-odd * odd * c);
    }
    return 1.0 - std::sqrt(2.0 * std::numbers::pi) / x * sum;
  }
  // P(K > x) = 2 sum_k (-1)^(k-1) exp(-2 k^2 x^2).
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_critical_value(std::int64_t n, double significance) {
  if (n < 1) throw DomainError("ks_critical_value needs n >= 1");
  if (!(significance > 0.0 && significance < 1.0)) {
    throw DomainError("significance must lie in (0, 1)");
  }
  // kolmogorov_survival is decreasing; bisect on [0, 10].
  double lo = 0.0;
  double hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_survival(mid) > significance) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi) / std::sqrt(static_cast<double>(n));
}

}  // namespace oneconvex
