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

#include "oneconvex/hull.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oneconvex/simplex.h"

namespace oneconvex {

namespace {

void check_tol(double tol) {
  if (!(tol >= kMinHullTol && tol <= kMaxHullTol)) {
    throw DomainError("hull tolerance must lie in [1e-12, 1e-6]");
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double separation_margin(std::span<const double> w, const Point& x,
                         std::span<const Point> set) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Point& y : set) best = std::max(best, dot(w, y.coords()));
  return dot(w, x.coords()) - best;
}

}  // namespace

MembershipVerdict in_convex_hull(const Point& x, std::span<const Point> set,
                                 double tol) {
  check_tol(tol);
  const int d = x.dim();
  if (common_dimension(set, d) != d) {
    throw DomainError("query point and set differ in dimension");
  }

  MembershipVerdict verdict;
  if (set.empty()) {
    verdict.direction.assign(d, 0.0);
    if (d > 0) verdict.direction[0] = 1.0;
    verdict.margin = std::numeric_limits<double>::infinity();
    return verdict;
  }

  const int m = static_cast<int>(set.size());
  StandardFormLp lp;
  lp.rows = d + 1;
  lp.cols = m;
  lp.a.assign(static_cast<std::size_t>(lp.rows) * m, 0.0);
  lp.b.assign(lp.rows, 0.0);
  lp.c.assign(m, 0.0);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < d; ++k) lp.at(k, j) = set[j][k];
    lp.at(d, j) = 1.0;
  }
  for (int k = 0; k < d; ++k) lp.b[k] = x[k];
  lp.b[d] = 1.0;

  SimplexOptions options;
  options.feasibility_tol = tol;
  const LpResult solution = solve_lp(lp, options);
  verdict.residual = solution.infeasibility;

  if (solution.status == LpStatus::kOptimal) {
    verdict.inside = true;
    verdict.weights = solution.x;
    return verdict;
  }

  // Farkas vector (w, c): <w, Y_j> + c <= 0 for all j and <w, x> + c > 0.
  std::vector<double> w(solution.farkas.begin(), solution.farkas.begin() + d);
  const double norm = std::sqrt(dot(w, w));
  if (norm > 0.0) {
    for (double& v : w) v /= norm;
  }
  verdict.margin = separation_margin(w, x, set);
  verdict.direction = std::move(w);
  return verdict;
}

bool verify_certificate(const MembershipVerdict& verdict, const Point& x,
                        std::span<const Point> set, double tol) {
  const int d = x.dim();
  if (verdict.inside) {
    if (verdict.weights.size() != set.size() || set.empty()) return false;
    double sum = 0.0;
    std::vector<double> combo(d, 0.0);
    for (std::size_t j = 0; j < set.size(); ++j) {
      const double lambda = verdict.weights[j];
      if (lambda < -tol) return false;
      sum += lambda;
      for (int k = 0; k < d; ++k) combo[k] += lambda * set[j][k];
    }
    if (std::abs(sum - 1.0) > tol) return false;
    for (int k = 0; k < d; ++k) {
      if (std::abs(combo[k] - x[k]) > 10.0 * tol) return false;
    }
    return true;
  }
  if (verdict.direction.size() != static_cast<std::size_t>(d)) return false;
  return separation_margin(verdict.direction, x, set) > tol;
}

int first_interior_index(std::span<const Point> set, double tol) {
  check_tol(tol);
  common_dimension(set);
  const int n = static_cast<int>(set.size());
  if (n <= 1) return -1;
  PointSet others;
  others.reserve(n - 1);
  for (int i = 0; i < n; ++i) {
    others.clear();
    for (int j = 0; j < n; ++j) {
      if (j != i) others.push_back(set[j]);
    }
    if (in_convex_hull(set[i], others, tol).inside) return i;
  }
  return -1;
}

bool is_one_convex(std::span<const Point> set, double tol) {
  return first_interior_index(set, tol) < 0;
}

}  // namespace oneconvex
