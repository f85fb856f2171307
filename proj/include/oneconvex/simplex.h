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

#ifndef ONECONVEX_SIMPLEX_H_
#define ONECONVEX_SIMPLEX_H_

#include <vector>

namespace oneconvex {

// A linear program in standard form:
//
//   minimize  c^T x   subject to  A x = b,  x >= 0.
//
// A is dense and stored row-major with `rows` rows and `cols` columns.
struct StandardFormLp {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

struct SimplexOptions {
  // Phase one declares the program feasible when the total artificial
  // infeasibility is below this threshold.
  double feasibility_tol = 1e-9;
  // Entries smaller than this are never used as pivots.
  double pivot_tol = 1e-12;
  // Reduced costs above -optimality_tol are treated as nonnegative.
  double optimality_tol = 1e-12;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  // Primal solution (size cols) when feasible.
  std::vector<double> x;
  double objective = 0.0;
  // Optimal phase-one value: the smallest achievable L1 norm of b - A x over
  // x >= 0, as found by phase one.
  double infeasibility = 0.0;
  // When infeasible, a Farkas vector y with y^T A <= 0 (columnwise, up to
  // round-off) and y^T b = infeasibility > 0.
  std::vector<double> farkas;
  int pivots = 0;
};

// Dense tableau two-phase simplex with Bland's smallest-index rule, so it
// terminates on degenerate programs. Intended for small programs (tens of
// rows and columns).
LpResult solve_lp(const StandardFormLp& lp, const SimplexOptions& options = {});

}  // namespace oneconvex

#endif  // ONECONVEX_SIMPLEX_H_
