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

#include <cmath>

#include "doctest.h"
#include "oneconvex/bounds.h"
#include "oneconvex/geometry.h"
#include "oneconvex/hull.h"
#include "oneconvex/montecarlo.h"

namespace oneconvex {
namespace {

Experiment experiment(int d, double r, std::int64_t n, std::int64_t trials,
                      std::uint64_t seed) {
  Experiment exp{LayerConfig(d, r)};
  exp.points = n;
  exp.trials = trials;
  exp.seed = seed;
  return exp;
}

TEST_SUITE("montecarlo") {
  TEST_CASE("three points in the plane are always 1-convex") {
    const MCEstimate e = estimate_p_one_convex(experiment(2, 0.0, 3, 1000, 42));
    CHECK(e.successes == 1000);
    CHECK(e.p_hat == 1.0);
    CHECK(e.ci_high == 1.0);
  }

  TEST_CASE("a single point is 1-convex") {
    const MCEstimate e = estimate_p_one_convex(experiment(7, 0.4, 1, 200, 1));
    CHECK(e.p_hat == 1.0);
  }

  TEST_CASE("four disk points agree with a planar-oracle simulation") {
    const std::int64_t trials = 100'000;
    const MCEstimate lp = estimate_p_one_convex(experiment(2, 0.0, 4, trials, 9));
    // Independent route: planar hull only, its own seed.
    const LayerConfig disk(2, 0.0);
    const std::int64_t oracle_hits =
        count_successes(trials, 10'009, 1, [&disk](RandomStream& s) {
          return oracle_one_convex_2d(sample_layer_points(disk, 4, s));
        });
    const MCEstimate reference = make_estimate(oracle_hits, trials);
    const double p1 = lp.p_hat;
    const double p2 = reference.p_hat;
    const double sigma =
        std::sqrt(p1 * (1 - p1) / trials + p2 * (1 - p2) / trials);
    CHECK(std::abs(p1 - p2) < 4.0 * sigma);
    CHECK(lp.ci_low < 0.7045 + 0.01);
    CHECK(lp.ci_high > 0.7045 - 0.01);
  }

  TEST_CASE("counts are identical for any worker count") {
    const Experiment exp = experiment(10, 0.5, 10, 2000, 77);
    const std::int64_t one = estimate_p_one_convex(exp, 1).successes;
    CHECK(estimate_p_one_convex(exp, 2).successes == one);
    CHECK(estimate_p_one_convex(exp, 8).successes == one);
    CHECK(estimate_p_one_convex(exp, 3).successes == one);
    CHECK(estimate_p_one_convex(exp, 1).successes == one);
  }

  TEST_CASE("count_successes is schedule independent") {
    const auto trial = [](RandomStream& s) { return s() % 3 == 0; };
    const std::int64_t base = count_successes(10'000, 5, 1, trial);
    for (unsigned jobs : {2u, 4u, 8u, 16u}) {
      CHECK(count_successes(10'000, 5, jobs, trial) == base);
    }
    CHECK(count_successes(0, 5, 4, trial) == 0);
  }

  TEST_CASE("exceptions inside trials propagate") {
    const auto trial = [](RandomStream& s) -> bool {
      if (s() % 50 == 0) throw DomainError("boom");
      return true;
    };
    CHECK_THROWS_AS(count_successes(5000, 1, 4, trial), DomainError);
  }

  TEST_CASE("intervals cover certain events") {
    for (int d : {2, 3, 5}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const MCEstimate e =
            estimate_p_one_convex(experiment(d, 0.2, d + 1, 300, seed));
        CHECK(e.successes == e.trials);
        CHECK(e.ci_low <= 1.0);
        CHECK(e.ci_high == 1.0);
      }
    }
  }

  TEST_CASE("more points make 1-convexity less likely") {
    for (auto [d, r] : {std::pair{2, 0.0}, std::pair{3, 0.5}, std::pair{5, 0.9}}) {
      const MCEstimate small = estimate_p_one_convex(experiment(d, r, 6, 2000, 3));
      const MCEstimate large = estimate_p_one_convex(experiment(d, r, 11, 2000, 4));
      CAPTURE(d);
      CHECK(small.p_hat >=
            large.p_hat - 2.0 * (small.half_width() + large.half_width()));
    }
  }

  TEST_CASE("estimates do not undercut the union bound") {
    for (auto [d, r, alpha] : {std::tuple{10, 0.5, 0.1}, std::tuple{8, 0.0, 0.25},
                               std::tuple{12, 0.7, 0.1}}) {
      const BoundParams p{d, r, alpha};
      const std::int64_t n = *largest_admissible_n(p);
      const MCEstimate e = estimate_p_one_convex(experiment(d, r, n, 2000, 21));
      const ProbLowerBound b = prob_lower_bound(n, LayerConfig(d, r));
      CAPTURE(d);
      CHECK(e.p_hat + e.half_width() >= b.sharp);
    }
  }

  TEST_CASE("theorem verification examples") {
    const TheoremReport a = verify_theorem({10, 0.5, 0.1}, 10'000, 1);
    CHECK(a.n == 10);
    CHECK(a.f == doctest::Approx(10.114346246792227));
    CHECK(a.estimate.p_hat > 0.9);
    CHECK(a.pass);
    CHECK(a.bound_consistent);

    const TheoremReport b = verify_theorem({6, 0.0, 0.5}, 10'000, 2);
    CHECK(b.n == 5);
    CHECK(b.estimate.p_hat > 0.5);
    CHECK(b.pass);
    CHECK(b.slack == doctest::Approx(b.estimate.p_hat - 0.5));

    CHECK_THROWS_WITH_AS(verify_theorem({1, 0.0, 0.5}, 100, 1),
                         doctest::Contains("no admissible n"), DomainError);
  }

  TEST_CASE("experiment validation and the work cap") {
    CHECK_THROWS_AS(estimate_p_one_convex(experiment(2, 0.0, 0, 10, 1)),
                    DomainError);
    CHECK_THROWS_AS(estimate_p_one_convex(experiment(2, 0.0, 3, 0, 1)),
                    DomainError);
    Experiment bad_tol = experiment(2, 0.0, 3, 10, 1);
    bad_tol.tol = 1e-3;
    CHECK_THROWS_AS(estimate_p_one_convex(bad_tol), DomainError);
    Experiment capped = experiment(100, 0.0, 50, 1000, 1);
    capped.max_work = 1e6;
    CHECK_THROWS_AS(estimate_p_one_convex(capped), ResourceLimitError);
  }

  TEST_CASE("estimate fields are consistent") {
    const MCEstimate e = make_estimate(37, 50, 0.25);
    CHECK(e.p_hat == 0.74);
    CHECK(e.ci_low <= e.p_hat);
    CHECK(e.p_hat <= e.ci_high);
    CHECK(e.wall_time_seconds == 0.25);
    CHECK(default_jobs() >= 1);
  }
}

}  // namespace
}  // namespace oneconvex
