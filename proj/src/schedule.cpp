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

#include "lrinv/schedule.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lrinv/errors.hpp"
#include "lrinv/pulse.hpp"

namespace lrinv {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Condition> gamma_endpoint_conditions() {
  return {{0.0, 0, kPi}, {0.0, 1, 0.0}, {1.0, 0, 0.0}, {1.0, 1, 0.0}};
}

// β̇(0) = −β̇(t_f) = 3π/(2t_f), i.e. ±3π/2 per unit s.
std::vector<Condition> third_order_beta_conditions() {
  return {{0.0, 0, -kPi / 2}, {1.0, 0, -kPi / 2}, {0.0, 1, 1.5 * kPi}, {1.0, 1, -1.5 * kPi}};
}

void require_positive_duration(double t_f) {
  if (!(t_f > 0.0) || !std::isfinite(t_f)) throw std::invalid_argument("t_f must be positive");
}

Polynomial fourth_order_gamma(double gamma_mid) {
  auto conds = gamma_endpoint_conditions();
  conds.push_back({0.5, 0, gamma_mid});
  return fit(conds, 4);
}

// Whether the quartic dips below zero on [0, 1]. γ(1) = γ̇(1) = 0 by
// construction, so the double root at s = 1 is divided out first; the sign
// near s = 1 is then carried by the quotient instead of rounding noise.
bool quartic_dips_negative(double gamma_mid) {
  const Polynomial q = deflate(fourth_order_gamma(gamma_mid), 1.0, 2);
  return minimum(q, 0.0, 1.0, 10000).value < 0.0;
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::third_order: return "third";
    case Family::fourth_order: return "fourth";
    case Family::antedated: return "antedated";
  }
  return "unknown";
}

double SchedulePair::beta_dot0_units() const { return beta_dot0 * 2.0 * t_f / kPi; }

SchedulePair third_order_pair(double t_f) {
  require_positive_duration(t_f);
  SchedulePair pair;
  pair.family = Family::third_order;
  pair.t_f = t_f;
  pair.beta_dot0 = 1.5 * kPi / t_f;
  pair.gamma_conditions = gamma_endpoint_conditions();
  pair.beta_conditions = third_order_beta_conditions();
  pair.gamma = fit(pair.gamma_conditions, 3);
  pair.beta = fit(pair.beta_conditions, 3);
  return pair;
}

SchedulePair fourth_order_pair(double t_f, double gamma_mid, Checks checks) {
  require_positive_duration(t_f);
  if (checks == Checks::enforce && gamma_mid < critical_gamma_mid() - 1e-6) {
    throw UnphysicalSchedule("fourth-order gamma with gamma(t_f/2) = " + std::to_string(gamma_mid) +
                             " drops below zero; minimum is " + std::to_string(critical_gamma_mid()));
  }
  SchedulePair pair = third_order_pair(t_f);
  pair.family = Family::fourth_order;
  pair.gamma_conditions.push_back({0.5, 0, gamma_mid});
  pair.gamma = fit(pair.gamma_conditions, 4);
  return pair;
}

SchedulePair antedated_pair(double t_f, double t_a, double beta_dot0, Checks checks) {
  require_positive_duration(t_f);
  const double s_a = t_a / t_f;
  if (!(s_a > 0.0 && s_a < 1.0)) throw std::invalid_argument("t_a must lie in (0, t_f)");
  if (checks == Checks::enforce) {
    if (!(beta_dot0 > 0.0)) throw std::invalid_argument("beta_dot0 must be positive");
    if (s_a < kAntedatedLowerFraction - 1e-12 || s_a > kAntedatedUpperFraction + 1e-12) {
      throw UnphysicalSchedule("t_a/t_f = " + std::to_string(s_a) + " outside [2/7.7, 1/2]");
    }
  }

  SchedulePair pair;
  pair.family = Family::antedated;
  pair.t_f = t_f;
  pair.t_a = t_a;
  pair.beta_dot0 = beta_dot0;
  pair.gamma_conditions = gamma_endpoint_conditions();
  pair.gamma_conditions.push_back({s_a, 0, 0.0});
  pair.gamma = fit(pair.gamma_conditions, 4);

  if (checks == Checks::enforce) {
    const Extremum low = minimum(pair.gamma, 0.0, 1.0);
    if (low.value < -kPi - 1e-9) {
      throw UnphysicalSchedule("antedated gamma falls below -pi at s = " + std::to_string(low.s));
    }
  }

  const double s_s = gamma_dot_zero_crossing(pair.gamma);
  const double slope = beta_dot0 * t_f;
  pair.beta_conditions = {
      {0.0, 0, -kPi / 2}, {1.0, 0, kPi / 2}, {s_a, 0, -kPi / 2},
      {s_s, 0, 0.0},      {0.0, 1, slope},   {1.0, 1, -slope},
  };
  pair.beta = fit(pair.beta_conditions, 5);

  if (checks == Checks::enforce) {
    for (double p : PulseShape(pair).poles()) {
      if (p <= s_a + 1e-12) {
        throw UnphysicalSchedule("antedated pulse has a non-removable singularity at s = " +
                                 std::to_string(p));
      }
    }
  }
  return pair;
}

SchedulePair antedated_pair_units(double t_f, double t_a, double beta_dot0_units, Checks checks) {
  require_positive_duration(t_f);
  return antedated_pair(t_f, t_a, beta_dot0_units * kPi / (2.0 * t_f), checks);
}

double gamma_dot_zero_crossing(const Polynomial& gamma) {
  const Polynomial gd = derivative(gamma);
  constexpr double kEdge = 1e-9;
  constexpr double kProbe = 1e-7;
  for (double s : real_roots(gd, kEdge, 1.0 - kEdge)) {
    if (s - kProbe <= 0.0 || s + kProbe >= 1.0) continue;
    if ((gd(s - kProbe) < 0.0) != (gd(s + kProbe) < 0.0)) return s;
  }
  throw NoCrossing("gamma_dot has no interior sign change");
}

double critical_gamma_mid() {
  static const double value = [] {
    double lo = 0.5;          // dips negative
    double hi = kPi / 2.0;    // the cubic itself, nonnegative
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      (quartic_dips_negative(mid) ? lo : hi) = mid;
    }
    return hi;
  }();
  return value;
}

}  // namespace lrinv
