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

#include "lrinv/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lrinv {

namespace {

constexpr double kPi = std::numbers::pi;

// Nearest integer multiple of π to p(s), and p - kπ.
std::pair<long, Polynomial> reduce(const Polynomial& p, double s) {
  const long k = std::lround(p(s) / kPi);
  return {k, p + (-static_cast<double>(k) * kPi)};
}

}  // namespace

Series Series::of(const Polynomial& p, double s0, std::size_t order) {
  std::vector<double> c = p.shifted(s0).coefficients();
  c.resize(order + 1, 0.0);
  return Series(std::move(c));
}

double Series::operator()(double h) const noexcept {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * h + *it;
  return acc;
}

Series Series::operator*(const Series& o) const {
  const std::size_t n = std::min(size(), o.size());
  std::vector<double> r(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) r[k] += c_[j] * o.c_[k - j];
  }
  return Series(std::move(r));
}

std::optional<std::size_t> Series::leading_order(double tol) const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (std::abs(c_[k]) > tol) return k;
  }
  return std::nullopt;
}

double Series::max_abs(std::size_t terms) const noexcept {
  double m = 0.0;
  for (std::size_t k = 0; k < std::min(terms, c_.size()); ++k) m = std::max(m, std::abs(c_[k]));
  return m;
}

SinCos sincos_of(const Polynomial& p, double s0, std::size_t order) {
  const auto [k, reduced] = reduce(p, s0);
  const Series u = Series::of(reduced, s0, order);
  const std::size_t n = order + 1;
  std::vector<double> sn(n, 0.0), cs(n, 0.0);
  sn[0] = std::sin(u[0]);
  cs[0] = std::cos(u[0]);
  // k S_k = Σ j u_j C_{k-j},  k C_k = -Σ j u_j S_{k-j}
  for (std::size_t i = 1; i < n; ++i) {
    double a = 0.0, b = 0.0;
    for (std::size_t j = 1; j <= i; ++j) {
      const double ju = static_cast<double>(j) * u[j];
      a += ju * cs[i - j];
      b += ju * sn[i - j];
    }
    sn[i] = a / static_cast<double>(i);
    cs[i] = -b / static_cast<double>(i);
  }
  if (k % 2 != 0) {
    for (double& v : sn) v = -v;
    for (double& v : cs) v = -v;
  }
  return {Series(std::move(sn)), Series(std::move(cs))};
}

SinCosValue sincos_at(const Polynomial& p, double s) {
  const auto [k, reduced] = reduce(p, s);
  const double u = reduced(s);
  const double sign = k % 2 != 0 ? -1.0 : 1.0;
  return {sign * std::sin(u), sign * std::cos(u)};
}

std::optional<Series> quotient(const Series& num, const Series& den) {
  // Zero tests are relative to the low-order coefficients; the tail of a
  // Taylor series can be large without saying anything about the leading order.
  constexpr std::size_t kScaleTerms = 5;
  const double den_tol = 1e-10 * std::max(1.0, den.max_abs(kScaleTerms));
  const double num_tol = 1e-8 * std::max(1.0, num.max_abs(kScaleTerms));
  const auto m = den.leading_order(den_tol);
  if (!m) return std::nullopt;
  for (std::size_t k = 0; k < *m; ++k) {
    if (std::abs(num[k]) > num_tol) return std::nullopt;
  }
  const std::size_t n = den.size() - *m;
  std::vector<double> q(n, 0.0);
  const double d0 = den[*m];
  for (std::size_t k = 0; k < n; ++k) {
    double acc = num[k + *m];
    for (std::size_t j = 1; j <= k; ++j) acc -= den[j + *m] * q[k - j];
    q[k] = acc / d0;
  }
  return Series(std::move(q));
}

}  // namespace lrinv
