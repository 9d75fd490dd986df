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
#include <string>
#include <vector>

#include "lrinv/dynamics.hpp"
#include "lrinv/pulse.hpp"
#include "lrinv/schedule.hpp"

namespace lrinv {

/// ∫_0^{t_end} Ω_R dt with t_end = t_a for antedated pairs, else t_f.
/// Dimensionless, so independent of t_f.
double energy_cost(const PulseShape& shape);
double energy_cost(const SchedulePair& pair);

struct ValidationReport {
  bool omega_r_nonnegative = true;
  bool delta_finite = true;
  bool gamma_range_ok = true;
  double max_adiabaticity_metric = 0.0;
  std::vector<std::string> messages;

  bool ok() const noexcept { return omega_r_nonnegative && delta_finite && gamma_range_ok; }
};

/// Grid checks on 10⁴ + 1 points: Ω_R ≥ −1e−9/t_f and |Δ| t_f < 10³ over the
/// active window [0, t_end], γ ∈ [−π, π] over [0, 1]. Never throws.
ValidationReport validate_schedule(const SchedulePair& pair, int grid = 10000);

struct SweepPoint {
  double beta_dot0_units;  // β̇(0) in units of π/(2 t_f)
  double cost;             // NaN when infeasible
  bool feasible;
};

struct SweepResult {
  double t_f = 1.0;
  double t_a = 0.0;
  std::vector<SweepPoint> grid;
  double argmin_beta_dot0_units = 0.0;
  double min_cost = 0.0;
  std::vector<double> infeasible_points;
};

/// Energy cost of antedated passages over β̇(0) ∈ [lo, hi] (units of π/2t_f)
/// on n uniform points, refined by golden-section search inside the best
/// bracket. `workers` ≤ 0 selects default_workers().
SweepResult sweep_beta_dot0(double t_f, double t_a, double lo, double hi, int n, int workers = 0);

/// Worker count from LRINV_WORKERS, else the hardware concurrency.
int default_workers();

struct PassageRow {
  double t;
  DensityMatrix iec;
  std::optional<DensityMatrix> adiabatic;  // empty where Ω = 0
};

struct PassageReport {
  Family family;
  std::optional<double> t_a;
  std::vector<PassageRow> rows;
  /// max |ρ^I_11 − ρ^ad_11| over rows with an adiabatic reference.
  double max_population_gap = 0.0;
  /// First time at which ρ^I_11 is within `tolerance` of its final value.
  std::optional<double> inversion_time;
  double max_abs_bloch_y_iec = 0.0;
  double max_abs_bloch_y_adiabatic = 0.0;
};

/// Tabulates ρ^I and ρ^ad for each pair on n_grid + 1 uniform times.
std::vector<PassageReport> compare_passages(const std::vector<SchedulePair>& pairs, const Weights& w,
                                            int n_grid, double tolerance = 1e-9);

}  // namespace lrinv
