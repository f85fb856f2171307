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

#ifndef ONECONVEX_GEOMETRY_H_
#define ONECONVEX_GEOMETRY_H_

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace oneconvex {

// Largest supported ambient dimension.
inline constexpr int kMaxDimension = 1'000'000;

// Thrown when an argument falls outside the documented domain of an
// operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A position in d-dimensional Euclidean space. All coordinates are finite.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords)
      : Point(std::vector<double>(coords)) {}

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  double norm() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

using PointSet = std::vector<Point>;

// Returns the common dimension of `points`, or throws DomainError when the
// dimensions disagree. An empty set reports `fallback`.
int common_dimension(std::span<const Point> points, int fallback = 0);

// The spherical layer between radius `inner_radius` and 1 in dimension `dim`.
class LayerConfig {
 public:
  LayerConfig(int dim, double inner_radius);

  int dim() const { return dim_; }
  double inner_radius() const { return inner_radius_; }

  // 1 - r^d, evaluated as -expm1(d log r).
  double one_minus_inner_pow() const { return one_minus_inner_pow_; }

 private:
  int dim_;
  double inner_radius_;
  double one_minus_inner_pow_;
};

// 1 - r^d for 0 <= r < 1. Exact for r = 0.
double one_minus_pow(double r, int d);

// Volume of the unit d-ball, pi^(d/2) / Gamma(d/2 + 1). Underflows to zero
// for very large d; use log_ball_volume there.
double ball_volume(int d);
double log_ball_volume(int d);

// Volume of the layer, ball_volume(d) * (1 - r^d).
double layer_volume(const LayerConfig& cfg);

// P(|X| <= t) for X uniform in the layer: (t^d - r^d) / (1 - r^d).
double radial_cdf(double t, const LayerConfig& cfg);

// Deterministic pseudo-random stream. Every consumer takes one explicitly.
using RandomStream = std::mt19937_64;

// Mixes `seed` and `index` into an independent stream seed (SplitMix64
// finalizer applied to a counter). Streams for different indices do not
// depend on the order in which they are created.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);
RandomStream make_stream(std::uint64_t seed, std::uint64_t index);

// Uniform direction on the unit sphere: a normalized vector of independent
// standard normal deviates. Degenerate draws are resampled.
std::vector<double> sample_unit_direction(int dim, RandomStream& stream);

// Uniform point in the layer. Direction from sample_unit_direction, radius by
// inverting radial_cdf.
Point sample_layer_point(const LayerConfig& cfg, RandomStream& stream);
PointSet sample_layer_points(const LayerConfig& cfg, std::int64_t count,
                             RandomStream& stream);

}  // namespace oneconvex

#endif  // ONECONVEX_GEOMETRY_H_
