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

#include <span>
#include <vector>

namespace lrinv {

/// Real polynomial in normalized time s, coefficients in ascending power.
/// An empty coefficient list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  /// Degree of the coefficient list; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  double operator()(double s) const noexcept;
  double coefficient(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0.0;
  }

  /// Taylor coefficients about `s0`: p(s0 + h) = Σ c_k h^k.
  Polynomial shifted(double s0) const;
  /// k-th derivative evaluated at s.
  double derivative_at(double s, unsigned order) const noexcept;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(double factor) const;
  Polynomial operator+(double constant) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<double> coeffs_;
};

double eval(const Polynomial& p, double s) noexcept;
Polynomial derivative(const Polynomial& p);

/// A value or derivative constraint p^(order)(s) = value.
struct Condition {
  double s = 0.0;
  unsigned derivative_order = 0;
  double value = 0.0;
};

/// Unique polynomial of the given degree meeting `degree + 1` conditions.
/// Throws SingularSystem when the constraints are dependent and
/// std::invalid_argument on a count mismatch or s outside [0, 1].
Polynomial fit(std::span<const Condition> conditions, int degree);

/// Real roots in [lo, hi], ascending. Sign changes are bracketed on a grid of
/// `cells` cells and refined by bisection; grid nodes where |p| is at rounding
/// level are reported directly.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi,
                               int cells = 4096);

/// Minimum of p over [lo, hi] from a dense grid plus the stationary points.
struct Extremum {
  double s;
  double value;
};
Extremum minimum(const Polynomial& p, double lo, double hi, int cells = 10000);
Extremum maximum(const Polynomial& p, double lo, double hi, int cells = 10000);

/// Quotient of p by (s - root)^multiplicity, discarding the remainder.
Polynomial deflate(const Polynomial& p, double root, unsigned multiplicity = 1);

}  // namespace lrinv
