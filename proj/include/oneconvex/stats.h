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

#ifndef ONECONVEX_STATS_H_
#define ONECONVEX_STATS_H_

#include <cstdint>
#include <functional>
#include <span>

namespace oneconvex {

// Two-sided standard normal quantile for 95% coverage.
inline constexpr double kZ95 = 1.959963984540054;

struct ProportionInterval {
  double low = 0.0;
  double high = 1.0;
  double half_width() const { return 0.5 * (high - low); }
};

// Wilson score interval for `successes` out of `trials`. Contains the point
// estimate; reaches exactly 1 (resp. 0) when every (resp. no) trial succeeds.
ProportionInterval wilson_interval(std::int64_t successes, std::int64_t trials,
                                   double z = kZ95);

// sup_t |F_n(t) - cdf(t)| for the empirical distribution F_n of `samples`.
// `cdf` must be nondecreasing. Throws on an empty sample.
double ks_statistic(std::span<const double> samples,
                    const std::function<double(double)>& cdf);

// P(K > x) for the limiting Kolmogorov distribution K.
double kolmogorov_survival(double x);

// Critical value of the one-sample statistic at `significance` for sample
// size n, from the limiting distribution: the c with P(K > c) = significance,
// scaled by 1 / sqrt(n).
double ks_critical_value(std::int64_t n, double significance);

}  // namespace oneconvex

#endif  // ONECONVEX_STATS_H_
