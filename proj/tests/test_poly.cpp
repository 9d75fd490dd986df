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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lrinv/errors.hpp"
#include "lrinv/poly.hpp"

using namespace lrinv;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

const Polynomial kCubic({pi, 0.0, -3 * pi, 2 * pi});
const Polynomial kQuartic({pi, 0.0, -11 * pi, 18 * pi, -8 * pi});

void require_coefficients(const Polynomial& p, const std::vector<double>& expected, double tol) {
  REQUIRE(p.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(p.coefficient(i) - expected[i]) <= tol);
}

}  // namespace

TEST_CASE("eval matches the closed forms") {
  CHECK(eval(kCubic, 0.0) == pi);
  CHECK(std::abs(eval(kCubic, 1.0)) < 1e-15);
  // π(1 − 3/4 + 1/4)
  CHECK(eval(kCubic, 0.5) == Approx(pi / 2).epsilon(1e-15));
  CHECK(eval(Polynomial(), 0.3) == 0.0);
}

TEST_CASE("derivative applies the power rule") {
  require_coefficients(derivative(kCubic), {0.0, -6 * pi, 6 * pi}, 0.0);
  CHECK(derivative(Polynomial({4.2})).size() == 0);
  require_coefficients(derivative(derivative(kCubic)), {-6 * pi, 12 * pi}, 0.0);
  CHECK(kCubic.derivative_at(0.3, 2) == Approx(-6 * pi + 12 * pi * 0.3));
}

TEST_CASE("fit solves value/derivative constraint systems") {
  SUBCASE("cubic endpoint problem") {
    const std::vector<Condition> c{{0, 0, pi}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
    require_coefficients(fit(c, 3), {pi, 0, -3 * pi, 2 * pi}, 1e-12);
  }
  SUBCASE("quartic with a midpoint zero") {
    const std::vector<Condition> c{{0, 0, pi}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {0.5, 0, 0}};
    require_coefficients(fit(c, 4), {pi, 0, -11 * pi, 18 * pi, -8 * pi}, 1e-12);
  }
  SUBCASE("constant") {
    const std::vector<Condition> c{{0, 0, -1.25}};
    require_coefficients(fit(c, 0), {-1.25}, 0.0);
  }
  SUBCASE("duplicate conditions are singular") {
    const std::vector<Condition> c{{0, 0, 1}, {0, 0, 1}, {1, 0, 0}};
    CHECK_THROWS_AS(fit(c, 2), SingularSystem);
  }
  SUBCASE("count mismatch and out-of-range s") {
    const std::vector<Condition> c{{0, 0, 1}, {1, 0, 0}};
    CHECK_THROWS_AS(fit(c, 2), std::invalid_argument);
    const std::vector<Condition> bad{{1.5, 0, 1}};
    CHECK_THROWS_AS(fit(bad, 0), std::invalid_argument);
  }
}

TEST_CASE("fit reproduces every condition (random systems)") {
  std::mt19937_64 rng(20260117);
  std::uniform_real_distribution<double> unit(0.0, 1.0), val(-5.0, 5.0);
  std::uniform_int_distribution<int> deg_dist(0, 5);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int degree = deg_dist(rng);
    // Distinct nodes, each carrying a value and (sometimes) a slope: a
    // Hermite-Birkhoff system that is nonsingular for distinct nodes.
    std::vector<Condition> conds;
    std::vector<double> nodes;
    while (static_cast<int>(conds.size()) < degree + 1) {
      double s = unit(rng);
      bool far = std::all_of(nodes.begin(), nodes.end(), [&](double x) { return std::abs(x - s) > 0.05; });
      if (!far) continue;
      nodes.push_back(s);
      conds.push_back({s, 0, val(rng)});
      if (static_cast<int>(conds.size()) < degree + 1 && unit(rng) < 0.5) conds.push_back({s, 1, val(rng)});
    }
    Polynomial p;
    try {
      p = fit(conds, degree);
    } catch (const SingularSystem&) {
      continue;
    }
    for (const auto& c : conds) CHECK(std::abs(p.derivative_at(c.s, c.derivative_order) - c.value) < 1e-9);
    ++checked;
  }
  CHECK(checked > 250);
}

TEST_CASE("derivative agrees with central finite differences") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0), val(-3.0, 3.0);
  std::vector<double> c(6);
  for (auto& v : c) v = val(rng);
  const Polynomial p(c);
  const Polynomial dp = derivative(p);
  constexpr double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double s = unit(rng);
    const double fd = (p(s + h) - p(s - h)) / (2 * h);
    CHECK(std::abs(dp(s) - fd) <= 1e-5 * std::max(1.0, std::abs(dp(s))));
  }
}

TEST_CASE("real_roots brackets sign changes") {
  const auto r = real_roots(derivative(kQuartic), 1e-9, 1.0);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Approx(11.0 / 16).epsilon(1e-12));
  CHECK(r[1] == Approx(1.0).epsilon(1e-12));

  const auto lin = real_roots(Polynomial({0.0, 1.0}), 0.0, 1.0);
  REQUIRE(lin.size() == 1);
  CHECK(lin[0] == 0.0);

  CHECK(real_roots(Polynomial({1.0}), 0.0, 1.0).empty());
  CHECK(real_roots(Polynomial(), 0.0, 1.0).empty());
  CHECK_THROWS_AS(real_roots(kCubic, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("real_roots finds planted roots (random products)") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.02, 0.98);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> roots(1 + trial % 4);
    for (auto& r : roots) r = unit(rng);
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end(), [](double a, double b) { return b - a < 1e-3; }) !=
        roots.end()) {
      continue;
    }
    Polynomial p({1.0});
    for (double r : roots) {
      std::vector<double> next(p.size() + 1, 0.0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        next[i] -= r * p.coefficient(i);
        next[i + 1] += p.coefficient(i);
      }
      p = Polynomial(next);
    }
    const auto found = real_roots(p, 0.0, 1.0);
    REQUIRE(found.size() == roots.size());
    CHECK(std::is_sorted(found.begin(), found.end()));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(std::abs(found[i] - roots[i]) < 1e-10);
      CHECK(std::abs(p(found[i])) < 1e-8);
    }
  }
}

TEST_CASE("shift, deflate and extrema") {
  const Polynomial shifted = kCubic.shifted(0.5);
  for (double h : {-0.3, 0.0, 0.2}) CHECK(shifted(h) == Approx(kCubic(0.5 + h)).epsilon(1e-14));

  // γ(s) = (1 − s)² (π + 2π s)
  const Polynomial q = deflate(kCubic, 1.0, 2);
  require_coefficients(q, {pi, 2 * pi}, 1e-12);

  const Extremum lo = minimum(kQuartic, 0.0, 1.0);
  CHECK(lo.s == Approx(11.0 / 16).epsilon(1e-10));
  CHECK(lo.value == Approx(kQuartic(11.0 / 16)).epsilon(1e-14));
  CHECK(maximum(kCubic, 0.0, 1.0).value == Approx(pi));
}
