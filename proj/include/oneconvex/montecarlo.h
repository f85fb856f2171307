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

#ifndef ONECONVEX_MONTECARLO_H_
#define ONECONVEX_MONTECARLO_H_

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "oneconvex/bounds.h"
#include "oneconvex/geometry.h"

namespace oneconvex {

// Thrown when an experiment would exceed its configured work budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultHullTol = 1e-9;
inline constexpr double kDefaultMaxWork = 1e12;

// One Monte Carlo experiment: `trials` independent samples of `points`
// uniform layer points, each checked for 1-convexity.
struct Experiment {
  LayerConfig layer;
  std::int64_t points = 1;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  double tol = kDefaultHullTol;
  // Upper bound on trials * points * dim.
  double max_work = kDefaultMaxWork;
};

struct MCEstimate {
  std::int64_t successes = 0;
  std::int64_t trials = 0;
  double p_hat = 0.0;
  // 95% Wilson interval.
  double ci_low = 0.0;
  double ci_high = 1.0;
  double wall_time_seconds = 0.0;

  double half_width() const { return 0.5 * (ci_high - ci_low); }
};

MCEstimate make_estimate(std::int64_t successes, std::int64_t trials,
                         double wall_time_seconds = 0.0);

// Worker count used when 0 is requested: the available hardware parallelism.
unsigned default_jobs();

// Runs `trial` for every index in [0, trials) on `jobs` threads and returns
// how many returned true. Trial i always receives make_stream(seed, i), so
// the count does not depend on `jobs` or on scheduling.
std::int64_t count_successes(std::int64_t trials, std::uint64_t seed,
                             unsigned jobs,
                             const std::function<bool(RandomStream&)>& trial);

// Estimates P(A_n), the probability that n uniform layer points are
// 1-convex.
MCEstimate estimate_p_one_convex(const Experiment& exp, unsigned jobs = 0);

struct TheoremReport {
  BoundParams params;
  double f = 0.0;
  std::int64_t n = 0;
  ProbLowerBound lower_bound;
  MCEstimate estimate;
  // ci_low > 1 - alpha - half_width.
  bool theorem_consistent = false;
  // p_hat > sharp lower bound - half_width.
  bool bound_consistent = false;
  bool pass = false;
  // p_hat - (1 - alpha): observed room above the guaranteed level.
  double slack = 0.0;
};

// Simulates the largest n strictly below bound_f(p) and checks the estimate
// against 1 - alpha and the union-bound guarantee. Requires bound_f(p) >= 2.
TheoremReport verify_theorem(const BoundParams& p, std::int64_t trials,
                             std::uint64_t seed, unsigned jobs = 0,
                             double tol = kDefaultHullTol);

}  // namespace oneconvex

#endif  // ONECONVEX_MONTECARLO_H_
