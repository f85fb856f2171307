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

// Test-only reference computations. Nothing here calls into the library's
// numerical routines; these are the independent routes the tests compare
// against.

#ifndef ONECONVEX_TESTS_ORACLES_H_
#define ONECONVEX_TESTS_ORACLES_H_

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace oneconvex::oracle {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;
using Rational = boost::multiprecision::cpp_rational;
// Enough digits for sqrt(1 + e) - 1 with e down to ~1e-250.
using WidePrecision = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<300>>;

inline HighPrecision hp_pi() {
  return boost::math::constants::pi<HighPrecision>();
}

// gamma_d via the two-step recurrence in 50-digit arithmetic.
inline HighPrecision ball_volume(int d) {
  HighPrecision v = (d % 2 == 1) ? HighPrecision(2) : hp_pi();
  for (int k = (d % 2 == 1) ? 3 : 4; k <= d; k += 2) v *= 2 * hp_pi() / k;
  return v;
}

inline HighPrecision radial_cdf(double t, int d, double r) {
  const HighPrecision td = pow(HighPrecision(t), d);
  const HighPrecision rd = pow(HighPrecision(r), d);
  return (td - rd) / (1 - rd);
}

inline HighPrecision bound_f(int d, double r, double alpha) {
  return sqrt(HighPrecision(alpha) * pow(HighPrecision(2), d) *
              (1 - pow(HighPrecision(r), d)));
}

// The prior bound in its original, unrationalized form.
inline WidePrecision bound_g_original(int d, double r, double alpha) {
  const WidePrecision R(r);
  const WidePrecision a(alpha);
  const WidePrecision s = 1 - R * R;
  return pow(R / sqrt(s), d) *
         (sqrt(1 + 2 * a * pow(s, WidePrecision(d) / 2) / pow(R, 2 * d)) - 1);
}

// Root of r^4 + r^2 - 1 on (0, 1) by bisection.
inline HighPrecision critical_radius_by_bisection() {
  HighPrecision lo = 0;
  HighPrecision hi = 1;
  for (int i = 0; i < 200; ++i) {
    const HighPrecision mid = (lo + hi) / 2;
    if (mid * mid * mid * mid + mid * mid - 1 < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// Exact value of a double as a rational.
inline Rational exact(double v) {
  int exponent = 0;
  const double mantissa = std::frexp(v, &exponent);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  Rational q(scaled);
  const int shift = exponent - 53;
  if (shift >= 0) {
    q *= boost::multiprecision::pow(boost::multiprecision::cpp_int(2), shift);
  } else {
    q /= boost::multiprecision::pow(boost::multiprecision::cpp_int(2), -shift);
  }
  return q;
}

// alpha 2^d (1 - r^d) in exact rational arithmetic on the given doubles.
inline Rational f_squared(int d, double r, double alpha) {
  const Rational two_d =
      boost::multiprecision::pow(boost::multiprecision::cpp_int(2), d);
  Rational rd = 1;
  const Rational rq = exact(r);
  for (int i = 0; i < d; ++i) rd *= rq;
  return exact(alpha) * two_d * (1 - rd);
}

// Sign of the planar orientation determinant in exact arithmetic.
inline int orientation(double ax, double ay, double bx, double by, double cx,
                       double cy) {
  const Rational det = (exact(bx) - exact(ax)) * (exact(cy) - exact(ay)) -
                       (exact(by) - exact(ay)) * (exact(cx) - exact(ax));
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

// Brute-force LP: enumerates every basis of the m x n system A x = b
// (row-major A, full row rank assumed), keeps the feasible basic solutions
// and returns the minimum of c^T x. Empty when no basis is feasible.
inline std::optional<double> lp_by_vertex_enumeration(
    int m, int n, const std::vector<double>& a, const std::vector<double>& b,
    const std::vector<double>& c) {
  std::optional<double> best;
  std::vector<int> cols(m);
  for (int i = 0; i < m; ++i) cols[i] = i;
  for (;;) {
    // Gaussian elimination with partial pivoting on [A_B | b].
    std::vector<double> mat(static_cast<std::size_t>(m) * (m + 1));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) mat[i * (m + 1) + j] = a[i * n + cols[j]];
      mat[i * (m + 1) + m] = b[i];
    }
    bool singular = false;
    for (int k = 0; k < m && !singular; ++k) {
      int piv = k;
      for (int i = k + 1; i < m; ++i) {
        if (std::abs(mat[i * (m + 1) + k]) > std::abs(mat[piv * (m + 1) + k])) {
          piv = i;
        }
      }
      if (std::abs(mat[piv * (m + 1) + k]) < 1e-12) {
        singular = true;
        break;
      }
      for (int j = 0; j <= m; ++j) {
        std::swap(mat[k * (m + 1) + j], mat[piv * (m + 1) + j]);
      }
      for (int i = 0; i < m; ++i) {
        if (i == k) continue;
        const double factor = mat[i * (m + 1) + k] / mat[k * (m + 1) + k];
        for (int j = k; j <= m; ++j) {
          mat[i * (m + 1) + j] -= factor * mat[k * (m + 1) + j];
        }
      }
    }
    if (!singular) {
      bool feasible = true;
      double objective = 0.0;
      for (int i = 0; i < m; ++i) {
        const double xi = mat[i * (m + 1) + m] / mat[i * (m + 1) + i];
        if (xi < -1e-9) feasible = false;
        objective += c[cols[i]] * xi;
      }
      if (feasible && (!best || objective < *best)) best = objective;
    }
    // Next combination of m columns out of n.
    int i = m - 1;
    while (i >= 0 && cols[i] == n - m + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < m; ++j) cols[j] = cols[j - 1] + 1;
  }
  return best;
}

}  // namespace oneconvex::oracle

#endif  // ONECONVEX_TESTS_ORACLES_H_
