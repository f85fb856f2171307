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

// Planar hull routines. No code is shared with the LP membership test.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "oneconvex/hull.h"

namespace oneconvex {

namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon() * 0.5;
// Shewchuk's static error bound for the floating-point orientation filter.
constexpr double kOrientErrorBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;

void check_planar(std::span<const Point> set) {
  if (common_dimension(set, 2) != 2) {
    throw DomainError("planar hull routines require dimension 2");
  }
}

// Error-free transformations: a + b = sum + err, a * b = prod + err.
void two_sum(double a, double b, double& sum, double& err) {
  sum = a + b;
  const double bv = sum - a;
  const double av = sum - bv;
  err = (a - av) + (b - bv);
}

void two_product(double a, double b, double& prod, double& err) {
  prod = a * b;
  err = std::fma(a, b, -prod);
}

// Exact sign of ax*by - ... using a nonoverlapping expansion built by
// repeated Grow-Expansion. The expansion's sign is the sign of its largest
// nonzero component, which is the last nonzero one.
int exact_orientation(const Point& a, const Point& b, const Point& c) {
  // det = bx*cy - bx*ay - ax*cy - by*cx + by*ax + ay*cx
  const std::array<std::array<double, 3>, 6> terms = {{
      {b[0], c[1], +1.0},
      {b[0], a[1], -1.0},
      {a[0], c[1], -1.0},
      {b[1], c[0], -1.0},
      {b[1], a[0], +1.0},
      {a[1], c[0], +1.0},
  }};
  std::array<double, 12> expansion{};
  int length = 0;
  auto grow = [&](double value) {
    double q = value;
    for (int i = 0; i < length; ++i) {
      double s, e;
      two_sum(q, expansion[i], s, e);
      expansion[i] = e;
      q = s;
    }
    expansion[length++] = q;
  };
  for (const auto& [u, v, sign] : terms) {
    double prod, err;
    two_product(u, v, prod, err);
    grow(sign * prod);
    grow(sign * err);
  }
  for (int i = length - 1; i >= 0; --i) {
    if (expansion[i] > 0.0) return 1;
    if (expansion[i] < 0.0) return -1;
  }
  return 0;
}

bool lexicographic_less(const Point& p, const Point& q) {
  return p[0] < q[0] || (p[0] == q[0] && p[1] < q[1]);
}

}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
  const double left = (b[0] - a[0]) * (c[1] - a[1]);
  const double right = (b[1] - a[1]) * (c[0] - a[0]);
  const double det = left - right;
  const double bound = kOrientErrorBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return exact_orientation(a, b, c);
}

PointSet convex_hull_2d(std::span<const Point> set) {
  check_planar(set);
  PointSet pts(set.begin(), set.end());
  std::sort(pts.begin(), pts.end(), lexicographic_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  // Pivot: lowest y, then lowest x. Every other point then lies at an angle
  // in [0, pi) around it, so orientation is a strict weak order.
  auto pivot_it = std::min_element(pts.begin(), pts.end(),
                                   [](const Point& p, const Point& q) {
                                     return p[1] < q[1] ||
                                            (p[1] == q[1] && p[0] < q[0]);
                                   });
  std::iter_swap(pts.begin(), pivot_it);
  const Point pivot = pts.front();

  // Along a common ray from the pivot, the nearer point has the coordinate
  // closer to the pivot's; compare raw coordinates to stay exact.
  auto nearer = [&pivot](const Point& p, const Point& q) {
    if (p[0] != q[0]) return p[0] > pivot[0] ? p[0] < q[0] : p[0] > q[0];
    return p[1] < q[1];
  };
  std::sort(pts.begin() + 1, pts.end(),
            [&](const Point& p, const Point& q) {
              const int o = orient2d(pivot, p, q);
              if (o != 0) return o > 0;
              return nearer(p, q);
            });

  PointSet hull;
  hull.reserve(pts.size());
  for (const Point& p : pts) {
    while (hull.size() >= 2 &&
           orient2d(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

bool oracle_one_convex_2d(std::span<const Point> set) {
  check_planar(set);
  if (set.size() <= 1) return true;
  return convex_hull_2d(set).size() == set.size();
}

double hull_area_2d(std::span<const Point> set) {
  const PointSet hull = convex_hull_2d(set);
  if (hull.size() <= 2) return 0.0;
  double twice_area = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& p = hull[i];
    const Point& q = hull[(i + 1) % hull.size()];
    twice_area += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * std::abs(twice_area);
}

}  // namespace oneconvex
