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

#include <cmath>
#include <cstring>
#include <numbers>

#include "doctest.h"
#include "lrinv/analysis.hpp"
#include "lrinv/errors.hpp"
#include "lrinv/schedule.hpp"

using namespace lrinv;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

// Composite Simpson on γ̇ / sin β, valid where sin β stays away from zero.
double simpson_cost(const SchedulePair& pr, int n = 20000) {
  const double b = pr.s_end();
  const double h = b / n;
  auto f = [&](double s) { return pr.gamma.derivative_at(s, 1) / std::sin(pr.beta(s)); };
  double acc = f(0.0) + f(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("energy cost against direct quadrature") {
  const SchedulePair third = third_order_pair(1.0);
  CHECK(energy_cost(third) == Approx(simpson_cost(third)).epsilon(1e-9));
  CHECK(energy_cost(third) == Approx(6.0291935981).epsilon(1e-9));

  const SchedulePair ante = antedated_pair_units(1.0, 0.5, 5.232);
  CHECK(energy_cost(ante) == Approx(simpson_cost(ante)).epsilon(1e-9));
  CHECK(std::abs(energy_cost(ante) - 3.230) < 0.01);

  for (double c : {1e-3, 1e3}) {
    CHECK(energy_cost(third_order_pair(c)) == Approx(energy_cost(third)).epsilon(1e-12));
    CHECK(energy_cost(antedated_pair_units(c, c / 2, 5.232)) == Approx(energy_cost(ante)).epsilon(1e-12));
  }
}

TEST_CASE("equal cost of the usual passages") {
  // The fourth-order γ differs from the cubic by k·s²(1−s)², antisymmetric
  // in derivative about s = 1/2, while 1/sin β is symmetric there.
  const double c3 = energy_cost(third_order_pair(1.0));
  const double c4a = energy_cost(fourth_order_pair(1.0, 2 * pi / 5));
  const double c4b = energy_cost(fourth_order_pair(1.0, 2 * pi / 6));
  CHECK(c3 > pi);
  CHECK(c4a > pi);
  CHECK(c4b > pi);
  CHECK(std::abs(c4a - c3) < 0.01);
  CHECK(std::abs(c4b - c3) < 0.01);
  MESSAGE("usual-passage costs: third " << c3 << ", fourth(2pi/5) " << c4a << ", fourth(2pi/6) " << c4b);
}

TEST_CASE("schedule validation") {
  SUBCASE("third-order baseline") {
    const ValidationReport r = validate_schedule(third_order_pair(1.0));
    CHECK(r.ok());
    CHECK(r.omega_r_nonnegative);
    CHECK(r.delta_finite);
    CHECK(r.gamma_range_ok);
    CHECK(r.max_adiabaticity_metric > 0.0);
    CHECK(r.max_adiabaticity_metric < 1.0);
  }
  SUBCASE("antedated below the band") {
    const ValidationReport r = validate_schedule(antedated_pair_units(1.0, 0.25, 1.0, Checks::skip));
    CHECK_FALSE(r.gamma_range_ok);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.messages.empty());
  }
  SUBCASE("fourth order below the critical midpoint") {
    const ValidationReport r = validate_schedule(fourth_order_pair(1.0, 2 * pi / 7, Checks::skip));
    CHECK_FALSE(r.ok());
  }
  SUBCASE("broken β reports divergence instead of throwing") {
    SchedulePair pr = third_order_pair(1.0);
    pr.beta = pr.beta + 0.1;
    ValidationReport r;
    CHECK_NOTHROW(r = validate_schedule(pr));
    CHECK_FALSE(r.delta_finite);
  }
  SUBCASE("antedated t_f/2 case") {
    const ValidationReport r = validate_schedule(antedated_pair(1.0, 0.5, pi / 2));
    CHECK(r.ok());
    CHECK(r.max_adiabaticity_metric > validate_schedule(third_order_pair(1.0)).max_adiabaticity_metric);
  }
}

TEST_CASE("sweep locates the t_a = t_f/2 minimum") {
  const SweepResult r = sweep_beta_dot0(1.0, 0.5, 0.1, 8.0, 200, 1);
  REQUIRE(r.grid.size() == 200);
  CHECK(r.infeasible_points.empty());
  CHECK(std::abs(r.min_cost - 3.230) < 0.01);
  CHECK(std::abs(r.argmin_beta_dot0_units - 5.232) < 0.05);
  CHECK(r.min_cost >= pi - 1e-6);
  for (const auto& p : r.grid) {
    CHECK(p.feasible);
    CHECK(r.min_cost <= p.cost);
  }
  CHECK(r.grid.front().beta_dot0_units == 0.1);
  CHECK(r.grid.back().beta_dot0_units == 8.0);
}

TEST_CASE("parallel sweep is bitwise serial") {
  const SweepResult a = sweep_beta_dot0(1.0, 1.0 / 3, 0.5, 4.0, 24, 1);
  const SweepResult b = sweep_beta_dot0(1.0, 1.0 / 3, 0.5, 4.0, 24, 3);
  REQUIRE(a.grid.size() == b.grid.size());
  for (std::size_t i = 0; i < a.grid.size(); ++i) {
    CHECK(a.grid[i].beta_dot0_units == b.grid[i].beta_dot0_units);
    CHECK(std::memcmp(&a.grid[i].cost, &b.grid[i].cost, sizeof(double)) == 0);
  }
  CHECK(a.min_cost == b.min_cost);
  CHECK(a.argmin_beta_dot0_units == b.argmin_beta_dot0_units);
}

TEST_CASE("sweep errors") {
  CHECK_THROWS_AS(sweep_beta_dot0(1.0, 0.5, 2.0, 1.0, 20), std::invalid_argument);
  CHECK_THROWS_AS(sweep_beta_dot0(1.0, 0.5, 0.1, 8.0, 9), std::invalid_argument);
  CHECK_THROWS_AS(sweep_beta_dot0(1.0, 0.25, 0.1, 8.0, 10), NoFeasiblePoint);
}

TEST_CASE("passage comparison") {
  const Weights w(0.2, 0.8);
  const auto reports = compare_passages({third_order_pair(1.0), antedated_pair(1.0, 0.5, pi / 2)}, w, 1000);
  REQUIRE(reports.size() == 2);
  const PassageReport& third = reports[0];
  CHECK(third.family == Family::third_order);
  CHECK(third.rows.size() == 1001);
  CHECK(third.max_population_gap < 0.05);
  CHECK(third.max_abs_bloch_y_adiabatic < 1e-12);
  CHECK(third.max_abs_bloch_y_iec > 0.1);
  REQUIRE(third.inversion_time.has_value());
  // population error 0.3·(1 − cos γ) drops below 1e-9 only within a few
  // grid steps of t_f, where γ ≈ 3π(1 − s)²
  const double t_inv = *third.inversion_time;
  CHECK(t_inv > 0.99);
  CHECK(0.3 * (1 - std::cos(3 * pi * (1 - t_inv) * (1 - t_inv))) < 1e-9);

  const PassageReport& ante = reports[1];
  REQUIRE(ante.inversion_time.has_value());
  CHECK(*ante.inversion_time == Approx(0.5).epsilon(1e-12));
}
