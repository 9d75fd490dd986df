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
#include <vector>

#include "lrinv/schedule.hpp"
#include "lrinv/series.hpp"

namespace lrinv {

enum class Branch { plus, minus };

/// Control values at one instant. Units depend on the producer: PulseShape
/// works in 1/t_f units, the free functions below in physical units.
struct Drive {
  double omega_r = 0.0;
  double delta = 0.0;
};

/// Closed-form evaluator of
///   Ω_R = γ̇ / sin β,   Δ = Ω_R cot γ cos β − β̇
/// in normalized time. All returned frequencies are multiplied by t_f, so the
/// evaluator is independent of the passage duration.
///
/// Points where sin γ or sin β vanish are located once at construction. Near
/// each, the two singular ratios are evaluated from exact Taylor series of the
/// schedule polynomials, which removes the 0/0 cancellation at s = 0, 1, t_a
/// and at the γ̇ sign change.
class PulseShape {
 public:
  explicit PulseShape(const SchedulePair& pair);

  const SchedulePair& pair() const noexcept { return pair_; }

  /// Unswitched Rabi frequency (the expression above, for all s in [0, 1]).
  double omega_r(double s) const;
  /// Unswitched detuning.
  double delta(double s) const;
  /// Physical drive: identical to the unswitched one up to t_a, then Ω_R = 0
  /// and Δ held at Δ(t_a).
  Drive drive(double s) const;
  /// The static drive {0, Δ(t_a)} in force after the switch. Throws
  /// std::logic_error for pairs without a switch.
  Drive switched_drive() const;
  /// Integrand of the Lewis-Riesenfeld phase, (Δ + β̇)cos γ + β̇ + Ω_R sin γ cos β,
  /// honouring the switch.
  double phase_rate(double s) const;

  /// Zeros of sin γ · sin β on [0, 1].
  std::vector<double> singular_points() const;
  /// Singular points at which Ω_R or Δ has no finite limit.
  std::vector<double> poles() const;

 private:
  struct Singular {
    double s;
    double radius;
    std::optional<Series> omega_r;   // γ̇ / sin β
    std::optional<Series> cot_term;  // γ̇ cos γ cos β / (sin γ sin β)
  };

  const Singular* near(double s) const;
  double cot_term(double s) const;

  SchedulePair pair_;
  Polynomial gamma_dot_;
  Polynomial beta_dot_;
  std::vector<Singular> singular_;
  std::optional<double> delta_switch_;
};

/// Generalized Rabi frequency √(Δ² + Ω_R²).
double generalized_rabi(const Drive& d) noexcept;

/// Physical Ω_R(s) (units of 1/time). Throws DivergentPulse at a pole.
double omega_r_at(const SchedulePair& pair, double s);
/// Physical Δ(s).
double delta_at(const SchedulePair& pair, double s);

struct PulseSample {
  double t;
  double omega_r;
  double delta;
};

struct PulseTable {
  double t_f = 1.0;
  std::optional<double> t_a;
  std::vector<PulseSample> samples;
};

/// n + 1 uniform samples of the physical drive on [0, t_f].
PulseTable synthesize(const SchedulePair& pair, int n);

/// |Ω_R Δ̇ − Ω̇_R Δ| / Ω³ at s, derivatives by central differences with step
/// 1e-6 t_f. Zero after an antedated switch (static Hamiltonian).
double adiabaticity_metric(const PulseShape& shape, double s);
double adiabaticity_metric(const SchedulePair& pair, double s);

/// α_±(t) = ∓½ ∫_0^t Ω̃ dt' by adaptive Simpson quadrature.
double lr_phase(const PulseShape& shape, double t, Branch branch);
double lr_phase(const SchedulePair& pair, double t, Branch branch);

}  // namespace lrinv
