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

#include "oneconvex/validation.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "oneconvex/bounds.h"
#include "oneconvex/geometry.h"
#include "oneconvex/hull.h"
#include "oneconvex/montecarlo.h"
#include "oneconvex/stats.h"

namespace oneconvex {

namespace {

struct Sizes {
  std::int64_t ks_samples;
  std::int64_t isotropy_samples;
  std::int64_t oracle_instances;
  std::int64_t certificate_instances;
  std::int64_t identity_draws;
  std::int64_t volume_sets;
  std::int64_t mc_trials;
  bool ks_full_grid;
};

Sizes sizes_for(ValidationLevel level) {
  if (level == ValidationLevel::kFull) {
    return {100'000, 100'000, 10'000, 10'000, 10'000, 100'000, 2'000, true};
  }
  return {20'000, 20'000, 2'000, 2'000, 2'000, 10'000, 500, false};
}

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

std::int64_t uniform_int(RandomStream& stream, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(stream);
}

SuiteResult sampler_containment(const Sizes& s, std::uint64_t seed) {
  std::int64_t bad = 0;
  std::int64_t total = 0;
  const int dims[] = {1, 2, 3, 10, 100};
  const double radii[] = {0.0, 0.5, 0.999};
  std::uint64_t stream_index = 0;
  for (int d : dims) {
    for (double r : radii) {
      const LayerConfig cfg(d, r);
      RandomStream stream = make_stream(seed, stream_index++);
      for (std::int64_t i = 0; i < s.ks_samples / 10; ++i) {
        const double norm = sample_layer_point(cfg, stream).norm();
        if (norm < r - 1e-12 || norm > 1.0 + 1e-12) ++bad;
        ++total;
      }
    }
  }
  return {"sampler_containment", bad == 0,
          format("%lld of %lld norms outside [r, 1]", static_cast<long long>(bad),
                 static_cast<long long>(total))};
}

SuiteResult sampler_ks(const Sizes& s, std::uint64_t seed) {
  std::vector<std::pair<int, double>> configs = {{2, 0.0}, {5, 0.5}, {20, 0.9}};
  if (s.ks_full_grid) {
    for (int d : {1, 3, 10, 50}) {
      for (double r : {0.0, 0.3, 0.7, 0.95}) configs.emplace_back(d, r);
    }
  }
  const double critical = ks_critical_value(s.ks_samples, 1e-4);
  double worst = 0.0;
  int failures = 0;
  std::uint64_t stream_index = 0;
  for (const auto& [d, r] : configs) {
    const LayerConfig cfg(d, r);
    RandomStream stream = make_stream(seed, stream_index++);
    std::vector<double> norms(s.ks_samples);
    for (double& v : norms) v = sample_layer_point(cfg, stream).norm();
    const double stat = ks_statistic(norms, [&cfg](double t) {
      return radial_cdf(std::clamp(t, cfg.inner_radius(), 1.0), cfg);
    });
    worst = std::max(worst, stat);
    if (!(stat < critical)) ++failures;
  }
  return {"sampler_ks", failures == 0,
          format("%zu configs, worst D=%.5f, critical=%.5f", configs.size(),
                 worst, critical)};
}

SuiteResult sampler_isotropy(const Sizes& s, std::uint64_t seed) {
  double worst = 0.0;
  std::uint64_t stream_index = 0;
  for (int d : {2, 3, 10, 50}) {
    RandomStream stream = make_stream(seed, stream_index++);
    std::vector<double> mean(d, 0.0);
    for (std::int64_t i = 0; i < s.isotropy_samples; ++i) {
      const auto u = sample_unit_direction(d, stream);
      for (int k = 0; k < d; ++k) mean[k] += u[k];
    }
    double norm2 = 0.0;
    for (double m : mean) {
      const double v = m / static_cast<double>(s.isotropy_samples);
      norm2 += v * v;
    }
    worst = std::max(worst, std::sqrt(norm2));
  }
  return {"sampler_isotropy", worst < 0.02,
          format("max |mean direction| = %.5f (limit 0.02)", worst)};
}

SuiteResult oracle_equivalence(const Sizes& s, std::uint64_t seed,
                               unsigned jobs) {
  const std::int64_t agree = count_successes(
      s.oracle_instances, seed, jobs, [](RandomStream& stream) {
        const int n = static_cast<int>(uniform_int(stream, 3, 12));
        const double r = uniform_int(stream, 0, 1) == 0 ? 0.0 : 0.5;
        const PointSet pts = sample_layer_points(LayerConfig(2, r), n, stream);
        return is_one_convex(pts, 1e-9) == oracle_one_convex_2d(pts);
      });
  return {"oracle_equivalence", agree == s.oracle_instances,
          format("%lld / %lld planar instances agree",
                 static_cast<long long>(agree),
                 static_cast<long long>(s.oracle_instances))};
}

SuiteResult certificate_soundness(const Sizes& s, std::uint64_t seed,
                                  unsigned jobs) {
  constexpr double kTol = 1e-9;
  const std::int64_t sound = count_successes(
      s.certificate_instances, seed, jobs, [](RandomStream& stream) {
        const int d = static_cast<int>(uniform_int(stream, 1, 6));
        const int m = static_cast<int>(uniform_int(stream, 0, 15));
        const LayerConfig ball(d, 0.0);
        const PointSet set = sample_layer_points(ball, m, stream);
        Point x;
        if (m > 0 && uniform_int(stream, 0, 1) == 0) {
          // Random convex combination of the set.
          std::vector<double> w(m);
          double total = 0.0;
          std::exponential_distribution<double> exponential(1.0);
          for (double& v : w) total += (v = exponential(stream));
          std::vector<double> c(d, 0.0);
          for (int j = 0; j < m; ++j) {
            for (int k = 0; k < d; ++k) c[k] += w[j] / total * set[j][k];
          }
          x = Point(std::move(c));
        } else {
          // Anywhere in the ball of radius 1.3, mostly outside the hull.
          const Point p = sample_layer_point(ball, stream);
          std::vector<double> c(p.coords().begin(), p.coords().end());
          for (double& v : c) v *= 1.3;
          x = Point(std::move(c));
        }
        const MembershipVerdict v = in_convex_hull(x, set, kTol);
        return verify_certificate(v, x, set, kTol);
      });
  return {"certificate_soundness", sound == s.certificate_instances,
          format("%lld / %lld certificates verified",
                 static_cast<long long>(sound),
                 static_cast<long long>(s.certificate_instances))};
}

SuiteResult theorem_self_consistency() {
  int checked = 0;
  int violations = 0;
  for (int d = 2; d <= 30; ++d) {
    for (double r : {0.0, 0.25, 0.5, 0.75, 0.9}) {
      for (double alpha : {0.01, 0.1, 0.5}) {
        const BoundParams p{d, r, alpha};
        const auto n = largest_admissible_n(p);
        if (!n) continue;
        ++checked;
        const ProbLowerBound lb = prob_lower_bound(*n, LayerConfig(d, r));
        if (!(lb.simplified > 1.0 - alpha) || !(lb.sharp >= lb.simplified)) {
          ++violations;
        }
      }
    }
  }
  return {"theorem_self_consistency", violations == 0,
          format("%d grid cells, %d violations", checked, violations)};
}

SuiteResult g_identity(const Sizes& s, std::uint64_t seed) {
  RandomStream stream = make_stream(seed, 0);
  std::uniform_real_distribution<double> radius(0.02, 0.98);
  std::uniform_real_distribution<double> alpha(0.001, 0.999);
  int compared = 0;
  double worst = 0.0;
  for (std::int64_t i = 0; i < s.identity_draws; ++i) {
    const BoundParams p{static_cast<int>(uniform_int(stream, 1, 300)),
                        radius(stream), alpha(stream)};
    const double direct = bound_g_direct(p);
    const double logspace = bound_g(p).value();
    if (!std::isnormal(direct) || !std::isnormal(logspace)) continue;
    ++compared;
    worst = std::max(worst, std::abs(direct - logspace) / logspace);
  }
  return {"g_identity", compared > 0 && worst <= 1e-12,
          format("%d draws compared, max relative gap %.3g (limit 1e-12)",
                 compared, worst)};
}

SuiteResult asymptotics() {
  const double alpha = 0.1;
  double worst_g = 0.0;
  double worst_ratio = 0.0;
  bool diverging = true;
  for (double r : {0.9, kCriticalRadius, 0.5}) {
    const BoundParams p{400, r, alpha};
    worst_g = std::max(worst_g,
                       std::abs((bound_g(p) / asymptotic_g(p)).value() - 1.0));
    worst_ratio = std::max(
        worst_ratio,
        std::abs((ratio_f_over_g(p) / asymptotic_ratio_f_over_g(p)).value() -
                 1.0));
    double previous = -1.0;
    for (int d : {50, 100, 200, 400}) {
      const double l = ratio_f_over_g({d, r, alpha}).log2;
      if (!(l > previous)) diverging = false;
      previous = l;
    }
  }
  const bool ok = worst_g <= 1e-3 && worst_ratio <= 1e-2 && diverging;
  return {"asymptotics", ok,
          format("d=400: |g/g_asym - 1| <= %.2g, |ratio/ratio_asym - 1| <= "
                 "%.2g, f/g increasing: %s",
                 worst_g, worst_ratio, diverging ? "yes" : "no")};
}

SuiteResult critical_root() {
  const double r = kCriticalRadius;
  const double residual = std::abs(r * r * r * r + r * r - 1.0);
  const double formula = std::sqrt((std::sqrt(5.0) - 1.0) / 2.0);
  const bool ok = residual < 1e-14 && std::abs(formula - r) <= 1e-15;
  return {"critical_root", ok,
          format("r* = %.17g, |r*^4 + r*^2 - 1| = %.3g", r, residual)};
}

SuiteResult volume_bound(const Sizes& s, std::uint64_t seed, unsigned jobs) {
  std::int64_t violations = 0;
  for (int k = 3; k <= 12; ++k) {
    const double limit = k * ball_volume(2) / 4.0;
    violations += count_successes(
        s.volume_sets, derive_stream_seed(seed, k), jobs,
        [k, limit](RandomStream& stream) {
          const PointSet pts = sample_layer_points(LayerConfig(2, 0.0), k, stream);
          return hull_area_2d(pts) > limit;
        });
  }
  return {"volume_bound", violations == 0,
          format("%lld sets per k in 3..12, %lld exceed k*pi/4",
                 static_cast<long long>(s.volume_sets),
                 static_cast<long long>(violations))};
}

SuiteResult mc_reproducibility(const Sizes& s, std::uint64_t seed) {
  const Experiment exp{LayerConfig(4, 0.3), 12, s.mc_trials, seed};
  const MCEstimate one = estimate_p_one_convex(exp, 1);
  const MCEstimate two = estimate_p_one_convex(exp, 2);
  const MCEstimate eight = estimate_p_one_convex(exp, 8);
  const bool ok = one.successes == two.successes &&
                  one.successes == eight.successes;
  return {"mc_reproducibility", ok,
          format("successes at 1/2/8 workers: %lld/%lld/%lld",
                 static_cast<long long>(one.successes),
                 static_cast<long long>(two.successes),
                 static_cast<long long>(eight.successes))};
}

}  // namespace

std::optional<ValidationLevel> parse_validation_level(std::string_view text) {
  if (text == "quick") return ValidationLevel::kQuick;
  if (text == "full") return ValidationLevel::kFull;
  return std::nullopt;
}

std::vector<SuiteResult> run_validation(ValidationLevel level,
                                        std::uint64_t seed, unsigned jobs) {
  const Sizes s = sizes_for(level);
  const std::vector<std::function<SuiteResult(std::uint64_t)>> suites = {
      [&](std::uint64_t k) { return sampler_containment(s, k); },
      [&](std::uint64_t k) { return sampler_ks(s, k); },
      [&](std::uint64_t k) { return sampler_isotropy(s, k); },
      [&](std::uint64_t k) { return oracle_equivalence(s, k, jobs); },
      [&](std::uint64_t k) { return certificate_soundness(s, k, jobs); },
      [](std::uint64_t) { return theorem_self_consistency(); },
      [&](std::uint64_t k) { return g_identity(s, k); },
      [](std::uint64_t) { return asymptotics(); },
      [](std::uint64_t) { return critical_root(); },
      [&](std::uint64_t k) { return volume_bound(s, k, jobs); },
      [&](std::uint64_t k) { return mc_reproducibility(s, k); },
  };
  std::vector<SuiteResult> results;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
      r = suites[i](derive_stream_seed(seed, i));
    } catch (const std::exception& e) {
      r = {"suite_" + std::to_string(i), false, e.what()};
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    r.seconds = elapsed.count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace oneconvex
