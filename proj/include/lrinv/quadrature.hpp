// Copyright 2026 The lrinv Authors
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

#pragma once

#include <cmath>
#include <utility>

namespace lrinv {

namespace detail {

template <typename F>
double simpson_step(F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth, double min_width) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  // The width floor stops rounding noise in f from driving the recursion
  // through every cell of a noisy stretch.
  if (depth <= 0 || b - a <= min_width || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, min_width) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, min_width);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance `tol`.
/// The interval is pre-split into `pieces` panels so that narrow features are
/// not missed by the first coarse estimate. Panels narrower than 1e-7 of the
/// range are never split further.
template <typename F>
double integrate(F&& f, double a, double b, double tol, int pieces = 16, int max_depth = 48) {
  if (a == b) return 0.0;
  double total = 0.0;
  const double w = (b - a) / pieces;
  const double min_width = 1e-7 * std::abs(b - a);
  double x0 = a;
  double f0 = f(x0);
  for (int i = 1; i <= pieces; ++i) {
    const double x1 = i == pieces ? b : a + w * i;
    const double f1 = f(x1);
    const double m = 0.5 * (x0 + x1);
    const double fm = f(m);
    const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    total += detail::simpson_step(f, x0, f0, x1, f1, m, fm, whole, tol / pieces, max_depth, min_width);
    x0 = x1;
    f0 = f1;
  }
  return total;
}

struct Minimum1d {
  double x;
  double value;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi].
template <typename F>
Minimum1d golden_section(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? Minimum1d{c, fc} : Minimum1d{d, fd};
}

}  // namespace lrinv
