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

#include "lrinv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lrinv/errors.hpp"
#include "lrinv/quadrature.hpp"

namespace lrinv {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(const char* what, double s) {
  std::ostringstream os;
  os << what << " at s = " << s;
  return os.str();
}

// Cost of one sweep point, NaN when the schedule is infeasible.
double feasible_cost(double t_f, double t_a, double units) {
  try {
    const SchedulePair pair = antedated_pair_units(t_f, t_a, units);
    if (!validate_schedule(pair).ok()) return std::numeric_limits<double>::quiet_NaN();
    return energy_cost(pair);
  } catch (const Error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

double energy_cost(const PulseShape& shape) {
  return integrate([&](double s) { return shape.omega_r(s); }, 0.0, shape.pair().s_end(), 1e-10);
}

double energy_cost(const SchedulePair& pair) { return energy_cost(PulseShape(pair)); }

ValidationReport validate_schedule(const SchedulePair& pair, int grid) {
  ValidationReport report;
  grid = std::max(grid, 10000);

  const Extremum lo = minimum(pair.gamma, 0.0, 1.0, grid);
  const Extremum hi = maximum(pair.gamma, 0.0, 1.0, grid);
  if (lo.value < -kPi - 1e-9 || hi.value > kPi + 1e-9) {
    report.gamma_range_ok = false;
    report.messages.push_back(describe("gamma leaves [-pi, pi]", lo.value < -kPi - 1e-9 ? lo.s : hi.s));
  }

  const PulseShape shape(pair);
  const double s_end = pair.s_end();
  for (const auto& p : shape.poles()) {
    if (p > s_end + 1e-12) continue;
    report.delta_finite = false;
    report.messages.push_back(describe("non-removable singularity", p));
  }

  bool omega_reported = false;
  bool delta_reported = false;
  for (int i = 0; i <= grid; ++i) {
    const double s = static_cast<double>(i) / grid;
    if (s > s_end + 1e-12) break;
    double om = 0.0;
    double de = 0.0;
    try {
      om = shape.omega_r(s);
      de = shape.delta(s);
    } catch (const DivergentPulse& e) {
      report.delta_finite = false;
      if (!delta_reported) report.messages.push_back(describe("divergent pulse", e.s()));
      delta_reported = true;
      continue;
    }
    if (!(om >= -1e-9)) {
      report.omega_r_nonnegative = false;
      if (!omega_reported) report.messages.push_back(describe("negative Omega_R", s));
      omega_reported = true;
    }
    if (!(std::abs(de) < 1e3) || !std::isfinite(om)) {
      report.delta_finite = false;
      if (!delta_reported) report.messages.push_back(describe("|Delta| t_f exceeds 1e3", s));
      delta_reported = true;
    }
    if (i > 0 && s < s_end) {
      try {
        report.max_adiabaticity_metric =
            std::max(report.max_adiabaticity_metric, adiabaticity_metric(shape, s));
      } catch (const Error&) {
        // Level crossing or pole; the pulse checks above report it.
      }
    }
  }
  if (const auto sa = pair.s_switch(); sa && report.delta_finite) {
    // Not a failure: the frozen state is still the target, it just stops
    // being an eigenstate of a nondegenerate Hamiltonian.
    if (std::abs(shape.switched_drive().delta) < 1e-9) {
      report.messages.push_back(describe("warning: Delta vanishes at the switch", *sa));
    }
  }
  return report;
}

int default_workers() {
  if (const char* env = std::getenv("LRINV_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

SweepResult sweep_beta_dot0(double t_f, double t_a, double lo, double hi, int n, int workers) {
  if (!(lo < hi)) throw std::invalid_argument("sweep: need lo < hi");
  if (n < 10) throw std::invalid_argument("sweep: need at least 10 grid points");
  if (workers <= 0) workers = default_workers();
  workers = std::min(workers, n);

  SweepResult result;
  result.t_f = t_f;
  result.t_a = t_a;
  result.grid.resize(static_cast<std::size_t>(n));
  auto xs = [&](int i) { return i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1); };

  auto work = [&](int first) {
    for (int i = first; i < n; i += workers) {
      const double x = xs(i);
      const double c = feasible_cost(t_f, t_a, x);
      result.grid[static_cast<std::size_t>(i)] = {x, c, !std::isnan(c)};
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  std::optional<int> best;
  for (int i = 0; i < n; ++i) {
    const auto& p = result.grid[static_cast<std::size_t>(i)];
    if (!p.feasible) {
      result.infeasible_points.push_back(p.beta_dot0_units);
      continue;
    }
    // Strict comparison keeps the smaller β̇(0) on ties.
    if (!best || p.cost < result.grid[static_cast<std::size_t>(*best)].cost) best = i;
  }
  if (!best) throw NoFeasiblePoint("no feasible beta_dot0 in the sweep range");

  const auto& b = result.grid[static_cast<std::size_t>(*best)];
  result.argmin_beta_dot0_units = b.beta_dot0_units;
  result.min_cost = b.cost;

  const double a = xs(std::max(*best - 1, 0));
  const double c = xs(std::min(*best + 1, n - 1));
  const Minimum1d refined = golden_section(
      [&](double x) {
        const double v = feasible_cost(t_f, t_a, x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
      },
      a, c, 1e-6);
  if (refined.value < result.min_cost) {
    result.min_cost = refined.value;
    result.argmin_beta_dot0_units = refined.x;
  }
  return result;
}

std::vector<PassageReport> compare_passages(const std::vector<SchedulePair>& pairs, const Weights& w,
                                            int n_grid, double tolerance) {
  if (n_grid < 2) throw std::invalid_argument("compare_passages: need n_grid >= 2");
  std::vector<PassageReport> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) {
    const PulseShape shape(pair);
    PassageReport rep{pair.family, pair.t_a, {}, 0.0, std::nullopt, 0.0, 0.0};
    rep.rows.reserve(static_cast<std::size_t>(n_grid) + 1);
    const double target = invariant_state(pair, w, pair.s_end())(0, 0).real();
    for (int i = 0; i <= n_grid; ++i) {
      const double s = static_cast<double>(i) / n_grid;
      const DensityMatrix iec = invariant_state(pair, w, s);
      std::optional<DensityMatrix> ad;
      try {
        ad = adiabatic_state(shape, w, s);
      } catch (const DegeneratePoint&) {
      }
      const double p11 = iec(0, 0).real();
      if (!rep.inversion_time && std::abs(p11 - target) <= tolerance) rep.inversion_time = s * pair.t_f;
      rep.max_abs_bloch_y_iec = std::max(rep.max_abs_bloch_y_iec, std::abs(iec.bloch().y));
      if (ad) {
        rep.max_population_gap = std::max(rep.max_population_gap, std::abs(p11 - (*ad)(0, 0).real()));
        rep.max_abs_bloch_y_adiabatic = std::max(rep.max_abs_bloch_y_adiabatic, std::abs(ad->bloch().y));
      }
      rep.rows.push_back({s * pair.t_f, iec, ad});
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace lrinv
