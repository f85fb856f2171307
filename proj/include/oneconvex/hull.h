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

#ifndef ONECONVEX_HULL_H_
#define ONECONVEX_HULL_H_

#include <span>
#include <vector>

#include "oneconvex/geometry.h"

namespace oneconvex {

// Accepted range for the membership tolerance.
inline constexpr double kMinHullTol = 1e-12;
inline constexpr double kMaxHullTol = 1e-6;

// Outcome of a convex-hull membership query, with a certificate that can be
// checked independently of the solver.
struct MembershipVerdict {
  bool inside = false;
  // inside: convex-combination weights, one per set member.
  std::vector<double> weights;
  // outside: unit direction w with <w, x> > max_j <w, Y_j>.
  std::vector<double> direction;
  // outside: <w, x> - max_j <w, Y_j>.
  double margin = 0.0;
  // L1 residual left by phase one of the feasibility program.
  double residual = 0.0;
};

// Decides whether `x` lies in conv(set) by solving the feasibility program
//   lambda >= 0,  sum lambda = 1,  sum lambda_j Y_j = x
// with the two-phase simplex. A phase-one residual below `tol` means inside;
// points on the hull boundary therefore count as inside. Otherwise the
// phase-one dual is turned into a separating direction. An empty set is
// never a superset of anything: outside with direction e_1.
MembershipVerdict in_convex_hull(const Point& x, std::span<const Point> set,
                                 double tol);

// True when the certificate in `verdict` is valid for (x, set): weights are
// >= -tol, sum to 1 within tol and reproduce x within 10 tol per coordinate;
// or the direction separates x from the set with margin > tol.
bool verify_certificate(const MembershipVerdict& verdict, const Point& x,
                        std::span<const Point> set, double tol);

// True iff no member lies in the convex hull of the others. Sets with at
// most one point are 1-convex. Coincident points are never 1-convex.
bool is_one_convex(std::span<const Point> set, double tol);

// Index of the first member found inside the hull of the others, or -1 when
// the set is 1-convex.
int first_interior_index(std::span<const Point> set, double tol);

// Sign of the orientation determinant of (a, b, c) in the plane: +1 for a
// counter-clockwise turn, -1 for clockwise, 0 for collinear. Exact for all
// finite double inputs whose products do not overflow.
int orient2d(const Point& a, const Point& b, const Point& c);

// Strict convex hull (collinear boundary points dropped) of a planar set in
// counter-clockwise order, computed by Graham scan over an angular sort.
// Duplicates are merged.
PointSet convex_hull_2d(std::span<const Point> set);

// Independent planar oracle: true iff every input point is a vertex of the
// hull. Duplicates and collinear mid-points are not vertices.
bool oracle_one_convex_2d(std::span<const Point> set);

// Area of the planar convex hull (shoelace formula); 0 for degenerate sets.
double hull_area_2d(std::span<const Point> set);

}  // namespace oneconvex

#endif  // ONECONVEX_HULL_H_
