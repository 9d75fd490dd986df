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

#include "lrinv/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "lrinv/errors.hpp"

namespace lrinv {

namespace {

// d^k/ds^k s^j = j!/(j-k)! s^(j-k)
double falling_factorial(unsigned j, unsigned k) {
  double f = 1.0;
  for (unsigned i = 0; i < k; ++i) f *= static_cast<double>(j - i);
  return f;
}

double rounding_scale(const Polynomial& p, double lo, double hi) {
  const double r = std::max({1.0, std::abs(lo), std::abs(hi)});
  double scale = 0.0;
  double rk = 1.0;
  for (double c : p.coefficients()) {
    scale += std::abs(c) * rk;
    rk *= r;
  }
  return scale;
}

double bisect(const Polynomial& p, double a, double b, double fa) {
  for (int it = 0; it < 200 && b - a > 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a)); ++it) {
    const double m = 0.5 * (a + b);
    const double fm = p(m);
    if (fm == 0.0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {}

double Polynomial::operator()(double s) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Polynomial Polynomial::shifted(double s0) const {
  // Repeated synthetic division by (s - s0) yields Taylor coefficients.
  std::vector<double> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t j = n - 1; j > k; --j) c[j - 1] += s0 * c[j];
  }
  return Polynomial(std::move(c));
}

double Polynomial::derivative_at(double s, unsigned order) const noexcept {
  double acc = 0.0;
  for (std::size_t j = coeffs_.size(); j-- > order;) {
    acc = acc * s + coeffs_[j] * falling_factorial(static_cast<unsigned>(j), order);
  }
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<double> c(std::max(size(), other.size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) + other.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other * -1.0; }

Polynomial Polynomial::operator*(double factor) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= factor;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(double constant) const {
  std::vector<double> c = coeffs_;
  if (c.empty()) c.push_back(0.0);
  c[0] += constant;
  return Polynomial(std::move(c));
}

double eval(const Polynomial& p, double s) noexcept { return p(s); }

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return Polynomial();
  std::vector<double> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
  return Polynomial(std::move(d));
}

Polynomial fit(std::span<const Condition> conditions, int degree) {
  if (degree < 0) throw std::invalid_argument("fit: negative degree");
  const auto n = static_cast<Eigen::Index>(degree) + 1;
  if (static_cast<Eigen::Index>(conditions.size()) != n) {
    throw std::invalid_argument("fit: need degree + 1 conditions, got " +
                                std::to_string(conditions.size()));
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Condition& c = conditions[static_cast<std::size_t>(r)];
    if (!(c.s >= 0.0 && c.s <= 1.0)) throw std::invalid_argument("fit: condition s outside [0, 1]");
    for (Eigen::Index j = c.derivative_order; j < n; ++j) {
      const auto ju = static_cast<unsigned>(j);
      a(r, j) = falling_factorial(ju, c.derivative_order) *
                std::pow(c.s, static_cast<double>(ju - c.derivative_order));
    }
    b(r) = c.value;
  }
  // LU's rcond estimate is unreliable on exactly singular input, so the
  // conditioning check goes through the singular values (n is tiny).
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  if (!(sv(n - 1) > 1e-13 * sv(0))) throw SingularSystem("fit: constraint matrix is singular");
  const Eigen::VectorXd x = a.partialPivLu().solve(b);
  if (!x.allFinite()) throw SingularSystem("fit: non-finite solution");
  return Polynomial(std::vector<double>(x.data(), x.data() + n));
}

std::vector<double> real_roots(const Polynomial& p, double lo, double hi, int cells) {
  if (!(lo < hi)) throw std::invalid_argument("real_roots: need lo < hi");
  cells = std::max(cells, 1024);
  std::vector<double> roots;
  if (std::all_of(p.coefficients().begin(), p.coefficients().end(), [](double c) { return c == 0.0; })) {
    return roots;
  }
  const double tol = 16 * std::numeric_limits<double>::epsilon() * rounding_scale(p, lo, hi);

  const auto count = static_cast<std::size_t>(cells) + 1;
  std::vector<double> xs(count), vs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = i + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(i) / cells;
    vs[i] = p(xs[i]);
  }
  auto is_zero = [&](std::size_t i) { return std::abs(vs[i]) <= tol; };

  for (std::size_t i = 0; i < count;) {
    if (is_zero(i)) {
      // One root per run of rounding-level nodes, at the smallest |p|.
      std::size_t best = i;
      std::size_t j = i;
      while (j < count && is_zero(j)) {
        if (std::abs(vs[j]) < std::abs(vs[best])) best = j;
        ++j;
      }
      roots.push_back(xs[best]);
      i = j;
      continue;
    }
    if (i + 1 < count && !is_zero(i + 1) && (vs[i] < 0) != (vs[i + 1] < 0)) {
      roots.push_back(bisect(p, xs[i], xs[i + 1], vs[i]));
    }
    ++i;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

template <typename Better>
Extremum extremum(const Polynomial& p, double lo, double hi, int cells, Better better) {
  Extremum best{lo, p(lo)};
  auto consider = [&](double s) {
    const double v = p(s);
    if (better(v, best.value)) best = {s, v};
  };
  for (int i = 1; i <= cells; ++i) consider(i == cells ? hi : lo + (hi - lo) * i / cells);
  if (p.degree() >= 2) {
    for (double s : real_roots(derivative(p), lo, hi)) consider(s);
  }
  return best;
}

}  // namespace

Extremum minimum(const Polynomial& p, double lo, double hi, int cells) {
  return extremum(p, lo, hi, cells, std::less<>());
}

Extremum maximum(const Polynomial& p, double lo, double hi, int cells) {
  return extremum(p, lo, hi, cells, std::greater<>());
}

Polynomial deflate(const Polynomial& p, double root, unsigned multiplicity) {
  std::vector<double> c = p.coefficients();
  for (unsigned m = 0; m < multiplicity && c.size() > 1; ++m) {
    std::vector<double> q(c.size() - 1);
    double carry = 0.0;
    for (std::size_t j = c.size(); j-- > 1;) {
      carry = c[j] + carry * root;
      q[j - 1] = carry;
    }
    c = std::move(q);
  }
  return Polynomial(std::move(c));
}

}  // namespace lrinv
