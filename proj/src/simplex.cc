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

#include "oneconvex/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "oneconvex/geometry.h"

namespace oneconvex {

namespace {

// Full tableau over the original columns, one artificial column per row and
// the right-hand side. Row `rows` is the reduced-cost row; its last entry
// holds the negated objective.
class Tableau {
 public:
  Tableau(const StandardFormLp& lp, std::vector<double>& row_sign)
      : rows_(lp.rows),
        structural_(lp.cols),
        width_(lp.cols + lp.rows + 1),
        data_(static_cast<std::size_t>(lp.rows + 1) * width_, 0.0),
        basis_(lp.rows) {
    row_sign.assign(rows_, 1.0);
    for (int i = 0; i < rows_; ++i) {
      const double s = lp.b[i] < 0.0 ? -1.0 : 1.0;
      row_sign[i] = s;
      for (int j = 0; j < structural_; ++j) at(i, j) = s * lp.at(i, j);
      at(i, structural_ + i) = 1.0;
      rhs(i) = s * lp.b[i];
      basis_[i] = structural_ + i;
    }
  }

  int rows() const { return rows_; }
  int structural() const { return structural_; }
  int columns() const { return width_ - 1; }
  bool is_artificial(int column) const { return column >= structural_; }

  double& at(int i, int j) {
    return data_[static_cast<std::size_t>(i) * width_ + j];
  }
  double& rhs(int i) { return at(i, width_ - 1); }
  double& cost(int j) { return at(rows_, j); }
  int basic(int i) const { return basis_[i]; }

  // Loads reduced costs for the cost vector `c` (indexed by column; entries
  // beyond c.size() are zero).
  void load_costs(const std::vector<double>& c) {
    const int known = static_cast<int>(c.size());
    for (int j = 0; j < width_; ++j) cost(j) = j < known ? c[j] : 0.0;
    for (int i = 0; i < rows_; ++i) {
      const int bj = basis_[i];
      const double cb = bj < known ? c[bj] : 0.0;
      if (cb == 0.0) continue;
      for (int j = 0; j < width_; ++j) cost(j) -= cb * at(i, j);
    }
  }

  void pivot(int row, int col) {
    const double inv = 1.0 / at(row, col);
    double* pr = &at(row, 0);
    for (int j = 0; j < width_; ++j) pr[j] *= inv;
    pr[col] = 1.0;
    for (int i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      double* pi = &at(i, 0);
      const double factor = pi[col];
      if (factor == 0.0) continue;
      for (int j = 0; j < width_; ++j) pi[j] -= factor * pr[j];
      pi[col] = 0.0;
    }
    basis_[row] = col;
  }

 private:
  int rows_;
  int structural_;
  int width_;
  std::vector<double> data_;
  std::vector<int> basis_;
};

enum class Outcome { kOptimal, kUnbounded };

// Runs simplex iterations with Bland's rule over columns [0, column_limit).
Outcome iterate(Tableau& t, int column_limit, const SimplexOptions& options,
                int& pivots) {
  const int max_pivots = 50 * (t.rows() + t.columns() + 10);
  for (;;) {
    int entering = -1;
    for (int j = 0; j < column_limit; ++j) {
      if (t.cost(j) < -options.optimality_tol) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return Outcome::kOptimal;

    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < t.rows(); ++i) {
      const double coeff = t.at(i, entering);
      if (coeff <= options.pivot_tol) continue;
      const double ratio = std::max(t.rhs(i), 0.0) / coeff;
      if (leaving < 0) {
        leaving = i;
        best_ratio = ratio;
        continue;
      }
      // Ties (up to round-off) go to the smallest basic index.
      const double slack = 1e-14 * std::max(1.0, best_ratio);
      if (ratio < best_ratio - slack) {
        leaving = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + slack &&
                 t.basic(i) < t.basic(leaving)) {
        leaving = i;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (leaving < 0) return Outcome::kUnbounded;

    t.pivot(leaving, entering);
    if (++pivots > max_pivots) {
      throw std::runtime_error("simplex exceeded its pivot budget");
    }
  }
}

}  // namespace

LpResult solve_lp(const StandardFormLp& lp, const SimplexOptions& options) {
  if (lp.rows < 0 || lp.cols < 0 ||
      lp.a.size() != static_cast<std::size_t>(lp.rows) * lp.cols ||
      lp.b.size() != static_cast<std::size_t>(lp.rows) ||
      lp.c.size() != static_cast<std::size_t>(lp.cols)) {
    throw DomainError("linear program has inconsistent dimensions");
  }

  std::vector<double> row_sign;
  Tableau t(lp, row_sign);
  LpResult result;

  // Phase one: minimize the sum of artificials.
  std::vector<double> phase_one_costs(t.columns(), 0.0);
  for (int j = t.structural(); j < t.columns(); ++j) phase_one_costs[j] = 1.0;
  t.load_costs(phase_one_costs);
  iterate(t, t.columns(), options, result.pivots);

  double infeasibility = 0.0;
  for (int i = 0; i < t.rows(); ++i) {
    if (t.is_artificial(t.basic(i))) infeasibility += std::max(t.rhs(i), 0.0);
  }
  result.infeasibility = infeasibility;

  if (infeasibility > options.feasibility_tol) {
    // Reduced cost of artificial i is 1 - y_i for the flipped system.
    result.status = LpStatus::kInfeasible;
    result.farkas.resize(lp.rows);
    for (int i = 0; i < lp.rows; ++i) {
      result.farkas[i] = row_sign[i] * (1.0 - t.cost(t.structural() + i));
    }
    return result;
  }

  // Accept the residual below the threshold: basic artificials are set to
  // zero, then driven out of the basis where a structural pivot exists. Rows
  // without one are redundant and keep their artificial at zero.
  for (int i = 0; i < t.rows(); ++i) {
    if (!t.is_artificial(t.basic(i))) continue;
    t.rhs(i) = 0.0;
    int best = -1;
    double best_abs = options.pivot_tol;
    for (int j = 0; j < t.structural(); ++j) {
      const double v = std::abs(t.at(i, j));
      if (v > best_abs) {
        best_abs = v;
        best = j;
      }
    }
    if (best >= 0) {
      t.pivot(i, best);
      ++result.pivots;
    }
  }

  // Phase two over structural columns only.
  t.load_costs(lp.c);
  if (iterate(t, t.structural(), options, result.pivots) ==
      Outcome::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.x.assign(lp.cols, 0.0);
  for (int i = 0; i < t.rows(); ++i) {
    if (!t.is_artificial(t.basic(i))) result.x[t.basic(i)] = t.rhs(i);
  }
  double objective = 0.0;
  for (int j = 0; j < lp.cols; ++j) objective += lp.c[j] * result.x[j];
  result.objective = objective;
  return result;
}

}  // namespace oneconvex
