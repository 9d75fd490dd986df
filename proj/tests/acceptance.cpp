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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Findings that are reported rather than judged print as
// NOTE lines.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "lrinv/analysis.hpp"
#include "lrinv/dynamics.hpp"
#include "lrinv/pulse.hpp"
#include "lrinv/schedule.hpp"

using namespace lrinv;

namespace {

constexpr double pi = std::numbers::pi;
const Weights kW(0.2, 0.8);

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<std::pair<const char*, SchedulePair>> families(double t_f = 1.0) {
  return {{"third", third_order_pair(t_f)},
          {"fourth(2pi/5)", fourth_order_pair(t_f, 2 * pi / 5)},
          {"fourth(2pi/6)", fourth_order_pair(t_f, 2 * pi / 6)},
          {"antedated(t_f/2)", antedated_pair(t_f, t_f / 2, pi / (2 * t_f))}};
}

double max_rk4_error(const SchedulePair& pr, int n) {
  const Trajectory tr = evolve(pr, invariant_state(pr, kW, 0.0), n);
  double err = 0.0;
  for (const auto& smp : tr.samples)
    err = std::max(err, (smp.rho.matrix() - invariant_state(pr, kW, smp.t / pr.t_f).matrix()).norm());
  return err;
}

struct SweepCase {
  const char* name;
  double t_a;
  double cost;
  double argmin;
  double cost_tol;
  double arg_tol;
};

const SweepCase kSweeps[] = {
    {"t_f/2", 0.5, 3.230, 5.232, 0.01, 0.05},
    {"t_f/3", 1.0 / 3, 3.149, 2.334, 0.05, 0.15},
    {"2t_f/7", 2.0 / 7, 3.144, 1.652, 0.05, 0.15},
    {"2t_f/7.6", 2.0 / 7.6, 3.143, 1.37, 0.05, 0.15},
};

}  // namespace

int main() {
  report(1, "invariant equation residual", [] {
    double worst = 0.0;
    for (const auto& [name, pr] : families()) {
      const PulseShape shape(pr);
      for (int i = 0; i <= 1000; ++i) worst = std::max(worst, invariant_residual(shape, pr, i / 1000.0));
    }
    return Outcome{worst < 1e-8, fmt("max residual * t_f = %.3e over 4 pairs (bound 1e-8)", worst)};
  });

  report(2, "RK4 against the invariant-basis state", [] {
    bool ok = true;
    std::string detail;
    for (const auto& [name, pr] : families()) {
      const double e = max_rk4_error(pr, 10000);
      const double ratio = max_rk4_error(pr, 250) / max_rk4_error(pr, 500);
      ok = ok && e < 1e-6 && ratio > 12.0 && ratio < 20.0;
      detail += fmt("%s err %.1e ratio %.2f; ", name, e, ratio);
    }
    return Outcome{ok, detail + "(bounds 1e-6, ratio in [12, 20])"};
  });

  report(3, "pure-state phase", [] {
    double worst_overlap = 0.0, worst_phase = 0.0;
    for (const auto& [name, pr] : families()) {
      const PulseShape shape(pr);
      const auto path = evolve_pure(shape, Branch::plus, 10000);
      for (std::size_t i = 0; i < path.size(); i += 50) {
        const auto ov = invariant_eigenstate(pr, path[i].t / pr.t_f, Branch::plus).dot(path[i].psi);
        worst_overlap = std::max(worst_overlap, 1.0 - std::abs(ov));
        const double d = std::remainder(std::arg(ov) - lr_phase(shape, path[i].t, Branch::plus), 2 * pi);
        worst_phase = std::max(worst_phase, std::abs(d));
      }
    }
    return Outcome{worst_overlap < 1e-6 && worst_phase < 1e-5,
                   fmt("1 - |overlap| <= %.2e, phase error <= %.2e rad", worst_overlap, worst_phase)};
  });

  report(4, "third-order endpoint pulse values", [] {
    const SchedulePair pr = third_order_pair(1.0);
    const double o0 = omega_r_at(pr, 0.0), o1 = omega_r_at(pr, 1.0);
    const double d0 = delta_at(pr, 0.0), d1 = delta_at(pr, 1.0);
    const double h_sum = (hamiltonian_at(pr, 0.0) + hamiltonian_at(pr, 1.0)).norm();
    const bool ok = std::abs(o0) < 1e-9 && std::abs(o1) < 1e-9 && std::abs(d0 + 4.5 * pi) < 1e-9 &&
                    std::abs(d1 - 4.5 * pi) < 1e-9 && h_sum < 1e-9;
    return Outcome{ok, fmt("Omega_R(0)=%.1e Omega_R(t_f)=%.1e Delta(0)+9pi/2=%.1e Delta(t_f)-9pi/2=%.1e |H(0)+H(t_f)|=%.1e",
                           o0, o1, d0 + 4.5 * pi, d1 - 4.5 * pi, h_sum)};
  });

  report(5, "structural constants", [] {
    const double ts = gamma_dot_zero_crossing(antedated_pair(1.0, 0.5, pi / 2).gamma);
    const double crit = critical_gamma_mid();
    const double rel = std::abs(crit / (2 * pi / 6.40175) - 1.0);
    return Outcome{std::abs(ts - 11.0 / 16) < 1e-9 && rel < 1e-3,
                   fmt("t_s = %.12f (11/16), critical = %.9f, rel. dev from 2pi/6.40175 = %.2e", ts, crit, rel)};
  });

  report(6, "usual-passage energy cost", [] {
    const double c3 = energy_cost(third_order_pair(1.0));
    const double c4a = energy_cost(fourth_order_pair(1.0, 2 * pi / 5));
    const double c4b = energy_cost(fourth_order_pair(1.0, 2 * pi / 6));
    const bool equal = std::abs(c4a - c3) < 0.01 && std::abs(c4b - c3) < 0.01;
    std::printf("[NOTE]  6 equal-cost claim %s: third %.6f, fourth(2pi/5) %.6f, fourth(2pi/6) %.6f\n",
                equal ? "holds" : "violated", c3, c4a, c4b);
    return Outcome{std::abs(c3 - 3.1482) < 1e-3, fmt("third-order cost %.6f (expected 3.1482 +- 0.001)", c3)};
  });

  std::vector<double> minima;
  report(7, "sweep minima", [&] {
    bool ok = true;
    std::string detail;
    for (const auto& c : kSweeps) {
      const SweepResult r = sweep_beta_dot0(1.0, c.t_a, 0.1, 8.0, 200);
      minima.push_back(r.min_cost);
      const bool this_ok = std::abs(r.min_cost - c.cost) <= c.cost_tol &&
                           std::abs(r.argmin_beta_dot0_units - c.argmin) <= c.arg_tol && r.min_cost >= pi;
      ok = ok && this_ok;
      detail += fmt("%s cost %.6f at %.4f; ", c.name, r.min_cost, r.argmin_beta_dot0_units);
    }
    return Outcome{ok, detail};
  });

  report(8, "minimum cost falls with t_a", [&] {
    if (minima.size() != 4) return Outcome{false, "sweeps did not complete"};
    const bool ok = std::is_sorted(minima.rbegin(), minima.rend());
    return Outcome{ok, fmt("%.6f >= %.6f >= %.6f >= %.6f", minima[0], minima[1], minima[2], minima[3])};
  });

  report(9, "antedated inversion", [] {
    const SchedulePair pr = antedated_pair(1.0, 0.5, pi / 2);
    const Trajectory tr = evolve(pr, invariant_state(pr, kW, 0.0), 10000);
    double worst = 0.0;
    for (const auto& smp : tr.samples) {
      if (smp.t < 0.5) continue;
      worst = std::max({worst, std::abs(smp.rho(0, 0).real() - 0.2), std::abs(smp.rho(1, 1).real() - 0.8)});
    }
    const double pre = commutator(hamiltonian_at(pr, 0.5), invariant_at(pr, 0.5)).norm();
    const double post = commutator(switched_hamiltonian(pr), invariant_at(pr, 0.5)).norm();
    return Outcome{worst < 1e-6 && pre > 1e-3 && post < 1e-10,
                   fmt("population error after t_a %.2e, |[H(t_a-),I]| = %.3f, |[H_switched,I]| = %.1e", worst,
                       pre, post)};
  });

  report(10, "Bloch geometry", [] {
    const SchedulePair pr = third_order_pair(1.0);
    const PassageReport rep = compare_passages({pr}, kW, 1000).front();
    const Trajectory tr = evolve(pr, invariant_state(pr, kW, 0.0), 10000);
    double norm_dev = 0.0, y_iec = 0.0;
    for (const auto& smp : tr.samples) {
      norm_dev = std::max(norm_dev, std::abs(smp.bloch.norm() - 0.6));
      y_iec = std::max(y_iec, std::abs(smp.bloch.y));
    }
    for (const auto& row : rep.rows) {
      norm_dev = std::max(norm_dev, std::abs(row.iec.bloch().norm() - 0.6));
      if (row.adiabatic) norm_dev = std::max(norm_dev, std::abs(row.adiabatic->bloch().norm() - 0.6));
    }
    const bool ok = rep.max_abs_bloch_y_adiabatic < 1e-12 && y_iec > 0.1 && norm_dev < 1e-9;
    return Outcome{ok, fmt("adiabatic max|y| = %.1e, IEC max|y| = %.4f, Bloch norm deviation %.1e",
                           rep.max_abs_bloch_y_adiabatic, y_iec, norm_dev)};
  });

  report(11, "t_f scale invariance", [] {
    constexpr double c = 1e3;
    double worst = 0.0;
    const auto upd = [&](double a, double b) { worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a))); };
    const auto base = families(1.0);
    const auto scaled = families(c);
    for (std::size_t k = 0; k < base.size(); ++k) {
      const SchedulePair& a = base[k].second;
      const SchedulePair& b = scaled[k].second;
      upd(energy_cost(a), energy_cost(b));
      upd(validate_schedule(a).max_adiabaticity_metric, validate_schedule(b).max_adiabaticity_metric);
      const Trajectory ta = evolve(a, invariant_state(a, kW, 0.0), 2000);
      const Trajectory tb = evolve(b, invariant_state(b, kW, 0.0), 2000);
      for (std::size_t i = 0; i < ta.samples.size(); ++i) {
        upd(ta.samples[i].rho(0, 0).real(), tb.samples[i].rho(0, 0).real());
        upd(ta.samples[i].rho(0, 1).imag(), tb.samples[i].rho(0, 1).imag());
        upd(ta.samples[i].t * c, tb.samples[i].t);
      }
    }
    const SweepResult sa = sweep_beta_dot0(1.0, 1.0 / 3, 0.1, 8.0, 60);
    const SweepResult sb = sweep_beta_dot0(c, c / 3, 0.1, 8.0, 60);
    upd(sa.min_cost, sb.min_cost);
    upd(sa.argmin_beta_dot0_units, sb.argmin_beta_dot0_units);
    return Outcome{worst < 1e-9, fmt("max relative deviation %.2e with t_f x 1e3", worst)};
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
