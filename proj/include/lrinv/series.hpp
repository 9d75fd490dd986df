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

#include <cstddef>
#include <optional>
#include <vector>

#include "lrinv/poly.hpp"

namespace lrinv {

/// Truncated Taylor series Σ c_k h^k about some expansion point.
/// Used to take removable-singularity limits of ratios built from
/// polynomials and their sines/cosines.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<double> c) : c_(std::move(c)) {}

  /// Taylor series of p about s0, padded or truncated to `order + 1` terms.
  static Series of(const Polynomial& p, double s0, std::size_t order);

  std::size_t size() const noexcept { return c_.size(); }
  double operator[](std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0.0; }
  const std::vector<double>& coefficients() const noexcept { return c_; }
  double operator()(double h) const noexcept;

  Series operator*(const Series& o) const;

  /// Index of the first coefficient with magnitude above `tol`, if any.
  std::optional<std::size_t> leading_order(double tol) const;
  /// Largest |c_k| among the first `terms` coefficients.
  double max_abs(std::size_t terms = static_cast<std::size_t>(-1)) const noexcept;

 private:
  std::vector<double> c_;
};

struct SinCos {
  Series sin;
  Series cos;
};

/// sin and cos of p(s0 + h) as series. The constant term is reduced by the
/// nearest multiple of π at the polynomial level, so zeros of sin/cos are
/// resolved to the accuracy of the polynomial coefficients.
SinCos sincos_of(const Polynomial& p, double s0, std::size_t order);

/// sin and cos of p(s) with the same argument reduction.
struct SinCosValue {
  double sin;
  double cos;
};
SinCosValue sincos_at(const Polynomial& p, double s);

/// Limit of N/D as a series when D has a zero of order m at the expansion
/// point and N vanishes to at least the same order. Empty when the lower
/// coefficients of N do not vanish (a genuine pole).
std::optional<Series> quotient(const Series& num, const Series& den);

}  // namespace lrinv
