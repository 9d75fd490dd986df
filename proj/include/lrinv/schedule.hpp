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

#include <optional>
#include <string_view>
#include <vector>

#include "lrinv/poly.hpp"

namespace lrinv {

enum class Family { third_order, fourth_order, antedated };

std::string_view to_string(Family f) noexcept;

/// Whether a constructor enforces its physical preconditions. `skip` exists so
/// that unphysical schedules can still be built and handed to the validator.
enum class Checks { enforce, skip };

/// Invariant parameters γ(s), β(s) in normalized time s = t/t_f.
///
/// β̇(0) is stored in radians per unit t. For antedated pairs the passage
/// completes at t_a, where the transverse drive is switched off.
struct SchedulePair {
  Family family = Family::third_order;
  Polynomial gamma;
  Polynomial beta;
  double t_f = 1.0;
  std::optional<double> t_a;
  double beta_dot0 = 0.0;
  /// The conditions each polynomial was fitted to, in s-units.
  std::vector<Condition> gamma_conditions;
  std::vector<Condition> beta_conditions;

  /// Normalized switch time, when antedated.
  std::optional<double> s_switch() const {
    return t_a ? std::optional<double>(*t_a / t_f) : std::nullopt;
  }
  /// Normalized time at which the passage completes (t_a/t_f or 1).
  double s_end() const { return t_a ? *t_a / t_f : 1.0; }
  /// β̇(0) in units of π/(2 t_f).
  double beta_dot0_units() const;
};

/// Lower edge of the antedated band, t_a ≥ kAntedatedLowerFraction · t_f.
inline constexpr double kAntedatedLowerFraction = 2.0 / 7.7;
inline constexpr double kAntedatedUpperFraction = 0.5;

/// Cubic γ with γ(0)=π, γ(1)=0, γ̇(0)=γ̇(1)=0 and cubic β with
/// β(0)=β(1)=−π/2, β̇(0)=−β̇(t_f)=3π/(2t_f).
SchedulePair third_order_pair(double t_f);

/// Quartic γ through the cubic's conditions and γ(1/2) = gamma_mid, with the
/// third-order β. Throws UnphysicalSchedule below critical_gamma_mid().
SchedulePair fourth_order_pair(double t_f, double gamma_mid, Checks checks = Checks::enforce);

/// Quartic γ with an extra zero at t_a, quintic β with
///   β(0)=−π/2, β(t_f)=π/2, β(t_a)=−π/2, β(t_s)=0, β̇(0)=−β̇(t_f)=beta_dot0,
/// where t_s is the interior sign change of γ̇.
SchedulePair antedated_pair(double t_f, double t_a, double beta_dot0,
                            Checks checks = Checks::enforce);

/// Antedated pair with β̇(0) given in units of π/(2 t_f).
SchedulePair antedated_pair_units(double t_f, double t_a, double beta_dot0_units,
                                  Checks checks = Checks::enforce);

/// Interior s at which γ̇ changes sign; NoCrossing if there is none.
double gamma_dot_zero_crossing(const Polynomial& gamma);

/// Smallest γ(1/2) for which the quartic of fourth_order_pair stays ≥ 0 on [0, 1].
double critical_gamma_mid();

}  // namespace lrinv
