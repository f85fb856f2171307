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

#include "oneconvex/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace oneconvex {

namespace {

// Below this norm a Gaussian direction draw is treated as degenerate.
constexpr double kMinDirectionNorm = 1e-300;

// Dimensions up to this value use the exact two-step recurrence for the
// ball volume; larger ones go through lgamma.
constexpr int kRecurrenceLimit = 100;

void check_dimension(int d) {
  if (d < 1 || d > kMaxDimension) {
    throw DomainError("dimension must be in [1, " +
                      std::to_string(kMaxDimension) + "], got " +
                      std::to_string(d));
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (!std::isfinite(c)) throw DomainError("point coordinate is not finite");
  }
}

double Point::norm() const {
  double sum = 0.0;
  for (double c : coords_) sum += c * c;
  return std::sqrt(sum);
}

int common_dimension(std::span<const Point> points, int fallback) {
  if (points.empty()) return fallback;
  const int d = points.front().dim();
  for (const Point& p : points) {
    if (p.dim() != d) {
      throw DomainError("dimension mismatch in point set: " +
                        std::to_string(d) + " vs " + std::to_string(p.dim()));
    }
  }
  return d;
}

double one_minus_pow(double r, int d) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("inner radius must satisfy 0 <= r < 1");
  }
  if (r == 0.0) return 1.0;
  return -std::expm1(d * std::log(r));
}

LayerConfig::LayerConfig(int dim, double inner_radius)
    : dim_(dim), inner_radius_(inner_radius) {
  check_dimension(dim);
  one_minus_inner_pow_ = one_minus_pow(inner_radius, dim);
}

double log_ball_volume(int d) {
  check_dimension(d);
  const double half = 0.5 * d;
  return half * std::log(std::numbers::pi) - std::lgamma(half + 1.0);
}

double ball_volume(int d) {
  check_dimension(d);
  if (d > kRecurrenceLimit) return std::exp(log_ball_volume(d));
  // gamma_d = gamma_{d-2} * 2 pi / d, seeded by gamma_1 = 2 or gamma_2 = pi.
  double v = (d % 2 == 1) ? 2.0 : std::numbers::pi;
  for (int k = (d % 2 == 1) ? 3 : 4; k <= d; k += 2) {
    v *= 2.0 * std::numbers::pi / k;
  }
  return v;
}

double layer_volume(const LayerConfig& cfg) {
  return ball_volume(cfg.dim()) * cfg.one_minus_inner_pow();
}

double radial_cdf(double t, const LayerConfig& cfg) {
  const double r = cfg.inner_radius();
  if (!(t >= r && t <= 1.0)) {
    throw DomainError("radial_cdf argument must lie in [r, 1]");
  }
  if (t == 1.0) return 1.0;
  // (t^d - r^d) / (1 - r^d) = 1 - (1 - t^d) / (1 - r^d).
  const double value = 1.0 - one_minus_pow(t, cfg.dim()) /
                                 cfg.one_minus_inner_pow();
  return std::clamp(value, 0.0, 1.0);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  // SplitMix64 at position `index` of the sequence keyed by `seed`, then one
  // more mix.
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  return mix(mix(seed) + kGamma * (index + 1));
}

RandomStream make_stream(std::uint64_t seed, std::uint64_t index) {
  return RandomStream(derive_stream_seed(seed, index));
}

std::vector<double> sample_unit_direction(int dim, RandomStream& stream) {
  check_dimension(dim);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(dim);
  for (;;) {
    double sum = 0.0;
    for (double& c : v) {
      c = normal(stream);
      sum += c * c;
    }
    const double norm = std::sqrt(sum);
    if (norm >= kMinDirectionNorm) {
      for (double& c : v) c /= norm;
      return v;
    }
  }
}

Point sample_layer_point(const LayerConfig& cfg, RandomStream& stream) {
  std::vector<double> coords = sample_unit_direction(cfg.dim(), stream);
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(stream);
  const double r = cfg.inner_radius();
  const double inv_d = 1.0 / cfg.dim();
  double rho;
  if (r == 0.0) {
    rho = std::pow(u, inv_d);
  } else {
    // rho^d = r^d + u (1 - r^d) = 1 - (1 - u)(1 - r^d); 1 - u is exact.
    rho = std::exp(std::log1p(-(1.0 - u) * cfg.one_minus_inner_pow()) * inv_d);
  }
  rho = std::clamp(rho, r, 1.0);
  for (double& c : coords) c *= rho;
  return Point(std::move(coords));
}

PointSet sample_layer_points(const LayerConfig& cfg, std::int64_t count,
                             RandomStream& stream) {
  PointSet points;
  points.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  for (std::int64_t i = 0; i < count; ++i) {
    points.push_back(sample_layer_point(cfg, stream));
  }
  return points;
}

}  // namespace oneconvex
