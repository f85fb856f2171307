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

#include "oneconvex/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "oneconvex/hull.h"
#include "oneconvex/stats.h"

namespace oneconvex {

namespace {

constexpr std::int64_t kChunk = 64;

}  // namespace

MCEstimate make_estimate(std::int64_t successes, std::int64_t trials,
                         double wall_time_seconds) {
  MCEstimate est;
  est.successes = successes;
  est.trials = trials;
  est.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
  const ProportionInterval ci = wilson_interval(successes, trials);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  est.wall_time_seconds = wall_time_seconds;
  return est;
}

unsigned default_jobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

std::int64_t count_successes(std::int64_t trials, std::uint64_t seed,
                             unsigned jobs,
                             const std::function<bool(RandomStream&)>& trial) {
  if (trials < 0) throw DomainError("trial count must be nonnegative");
  if (jobs == 0) jobs = default_jobs();
  const auto workers = static_cast<unsigned>(
      std::min<std::int64_t>(jobs, std::max<std::int64_t>(1, trials / kChunk)));

  std::atomic<std::int64_t> next{0};
  std::atomic<std::int64_t> total{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    std::int64_t local = 0;
    try {
      for (;;) {
        const std::int64_t begin = next.fetch_add(kChunk);
        if (begin >= trials) break;
        const std::int64_t end = std::min(trials, begin + kChunk);
        for (std::int64_t i = begin; i < end; ++i) {
          RandomStream stream = make_stream(seed, static_cast<std::uint64_t>(i));
          if (trial(stream)) ++local;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(trials);
    }
    total.fetch_add(local);
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return total.load();
}

MCEstimate estimate_p_one_convex(const Experiment& exp, unsigned jobs) {
  if (exp.points < 1) throw DomainError("points per trial must be at least 1");
  if (exp.trials < 1) throw DomainError("trial count must be at least 1");
  if (!(exp.tol >= kMinHullTol && exp.tol <= kMaxHullTol)) {
    throw DomainError("hull tolerance must lie in [1e-12, 1e-6]");
  }
  const double work = static_cast<double>(exp.trials) *
                      static_cast<double>(exp.points) * exp.layer.dim();
  if (work > exp.max_work) {
    throw ResourceLimitError("experiment needs " + std::to_string(work) +
                             " work units, above the cap of " +
                             std::to_string(exp.max_work));
  }

  const auto start = std::chrono::steady_clock::now();
  const std::int64_t successes = count_successes(
      exp.trials, exp.seed, jobs, [&exp](RandomStream& stream) {
        const PointSet pts = sample_layer_points(exp.layer, exp.points, stream);
        return is_one_convex(pts, exp.tol);
      });
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return make_estimate(successes, exp.trials, elapsed.count());
}

TheoremReport verify_theorem(const BoundParams& p, std::int64_t trials,
                             std::uint64_t seed, unsigned jobs, double tol) {
  TheoremReport report;
  report.params = p;
  report.f = bound_f(p).value();
  if (!(report.f >= 2.0)) {
    throw DomainError("no admissible n: bound_f = " + std::to_string(report.f) +
                      " is below 2");
  }
  const auto n = largest_admissible_n(p);
  if (!n) throw ResourceLimitError("admissible n is too large to simulate");
  report.n = *n;

  const LayerConfig layer(p.dim, p.inner_radius);
  report.lower_bound = prob_lower_bound(report.n, layer);

  Experiment exp{layer, report.n, trials, seed, tol};
  report.estimate = estimate_p_one_convex(exp, jobs);

  const double hw = report.estimate.half_width();
  report.theorem_consistent = report.estimate.ci_low > 1.0 - p.alpha - hw;
  report.bound_consistent = report.estimate.p_hat > report.lower_bound.sharp - hw;
  report.pass = report.theorem_consistent && report.bound_consistent;
  report.slack = report.estimate.p_hat - (1.0 - p.alpha);
  return report;
}

}  // namespace oneconvex
