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

#include "lrinv/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>
#include <utility>
#include <vector>

#include "lrinv/analysis.hpp"
#include "lrinv/config.hpp"
#include "lrinv/dynamics.hpp"
#include "lrinv/errors.hpp"
#include "lrinv/pulse.hpp"

namespace lrinv::cli {

namespace fs = std::filesystem;

namespace {

using Summary = std::vector<std::pair<std::string, std::string>>;

class CsvWriter {
 public:
  // `note` goes out as a leading '#' line, ahead of the column header.
  CsvWriter(const fs::path& path, std::initializer_list<std::string_view> header, std::string_view note = {})
      : out_(path) {
    if (!out_) throw ConfigError("cannot write '" + path.string() + "'");
    if (!note.empty()) out_ << "# " << note << '\n';
    write_row_strings(header);
  }

  void row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
      if (!first) out_ << ',';
      out_ << format_number(v);
      first = false;
    }
    out_ << '\n';
  }

 private:
  void write_row_strings(std::initializer_list<std::string_view> cells) {
    bool first = true;
    for (auto c : cells) {
      if (!first) out_ << ',';
      out_ << c;
      first = false;
    }
    out_ << '\n';
  }

  std::ofstream out_;
};

void write_summary(const fs::path& path, const Summary& summary) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  for (const auto& [k, v] : summary) out << k << " = " << v << '\n';
}

void add(Summary& s, std::string key, double v) { s.emplace_back(std::move(key), format_number(v)); }
void add(Summary& s, std::string key, std::string v) { s.emplace_back(std::move(key), std::move(v)); }

void add_header(Summary& s, std::string_view sub, const RunConfig& cfg) {
  add(s, "subcommand", std::string(sub));
  add(s, "family", std::string(to_string(cfg.family)));
  add(s, "t_f", cfg.t_f);
  if (cfg.t_a) add(s, "t_a", *cfg.t_a);
}

const std::initializer_list<std::string_view> kStateColumns = {
    "t", "rho11", "rho22", "re_rho12", "im_rho12", "bloch_x", "bloch_y", "bloch_z", "fidelity"};

std::string units_note(double t_f) {
  return "t_f = " + format_number(t_f) + "; frequencies in units of 1/t_f";
}

void state_row(CsvWriter& csv, double t, const DensityMatrix& rho, double fid) {
  const BlochVector b = rho.bloch();
  csv.row({t, rho(0, 0).real(), rho(1, 1).real(), rho(0, 1).real(), rho(0, 1).imag(), b.x, b.y, b.z, fid});
}

void warn_degenerate_switch(const PulseShape& shape, std::ostream& err) {
  if (!shape.pair().t_a) return;
  if (std::abs(shape.switched_drive().delta) < 1e-9) {
    err << "warning: Delta(t_a) = 0; population inversion after the switch is undefined\n";
  }
}

int synth(const RunConfig& cfg, const fs::path& out, std::ostream& err) {
  const SchedulePair pair = cfg.pair();
  const PulseShape shape(pair);
  warn_degenerate_switch(shape, err);
  CsvWriter csv(out / "pulse.csv", {"t", "omega_r", "delta", "gamma", "beta"}, units_note(pair.t_f));
  double max_metric = 0.0;
  for (int i = 0; i <= cfg.grid_n; ++i) {
    const double s = static_cast<double>(i) / cfg.grid_n;
    const Drive d = shape.drive(s);
    csv.row({s * pair.t_f, d.omega_r, d.delta, pair.gamma(s), pair.beta(s)});
    if (i > 0 && s < pair.s_end()) {
      try {
        max_metric = std::max(max_metric, adiabaticity_metric(shape, s));
      } catch (const DegeneratePoint&) {
      }
    }
  }
  Summary s;
  add_header(s, "synth", cfg);
  add(s, "frequency_unit", std::string("1/t_f"));
  add(s, "energy_cost", energy_cost(shape));
  add(s, "max_adiabaticity_metric", max_metric);
  write_summary(out / "summary.txt", s);
  return kOk;
}

int evolve_cmd(const RunConfig& cfg, const fs::path& out, std::ostream& err) {
  const SchedulePair pair = cfg.pair();
  const PulseShape shape(pair);
  warn_degenerate_switch(shape, err);
  const Weights w = cfg.weights();
  const DensityMatrix target = invariant_state(pair, w, pair.s_end());
  const Trajectory traj = evolve(shape, invariant_state(pair, w, 0.0), cfg.rk4_steps, target);

  double max_dev = 0.0;
  {
    CsvWriter csv(out / "trajectory_iec.csv", kStateColumns);
    for (const auto& smp : traj.samples) {
      state_row(csv, smp.t, smp.rho, smp.fidelity_to_target);
      const DensityMatrix exact = invariant_state(pair, w, smp.t / pair.t_f);
      max_dev = std::max(max_dev, (smp.rho.matrix() - exact.matrix()).norm());
    }
  }

  const auto reports = compare_passages({pair}, w, cfg.grid_n);
  const PassageReport& rep = reports.front();
  {
    CsvWriter iec(out / "trajectory_invariant.csv", kStateColumns);
    CsvWriter ad(out / "trajectory_adiabatic.csv", kStateColumns);
    for (const auto& row : rep.rows) {
      state_row(iec, row.t, row.iec, fidelity(row.iec, target));
      if (row.adiabatic) state_row(ad, row.t, *row.adiabatic, fidelity(*row.adiabatic, target));
    }
  }

  Summary s;
  add_header(s, "evolve", cfg);
  add(s, "p_plus", w.p_plus());
  add(s, "p_minus", w.p_minus());
  add(s, "rk4_steps", static_cast<double>(cfg.rk4_steps));
  add(s, "energy_cost", energy_cost(shape));
  add(s, "max_deviation_from_invariant_state", max_dev);
  add(s, "final_fidelity", traj.samples.back().fidelity_to_target);
  add(s, "inversion_time", rep.inversion_time ? *rep.inversion_time : std::nan(""));
  add(s, "max_population_gap_adiabatic", rep.max_population_gap);
  write_summary(out / "summary.txt", s);
  return kOk;
}

int sweep_cmd(const RunConfig& cfg, const fs::path& out) {
  if (cfg.family != Family::antedated) throw ConfigError("sweep requires family = antedated");
  const SweepConfig sw = cfg.sweep.value_or(SweepConfig{});
  const SweepResult res = sweep_beta_dot0(cfg.t_f, *cfg.t_a, sw.lo, sw.hi, sw.n);
  {
    CsvWriter csv(out / "sweep.csv", {"beta_dot0_units", "cost", "feasible"});
    for (const auto& p : res.grid) csv.row({p.beta_dot0_units, p.cost, p.feasible ? 1.0 : 0.0});
  }
  Summary s;
  add_header(s, "sweep", cfg);
  add(s, "sweep_lo", sw.lo);
  add(s, "sweep_hi", sw.hi);
  add(s, "sweep_n", static_cast<double>(sw.n));
  add(s, "min_cost", res.min_cost);
  add(s, "argmin_beta_dot0", res.argmin_beta_dot0_units);
  add(s, "infeasible_points", static_cast<double>(res.infeasible_points.size()));
  write_summary(out / "summary.txt", s);
  return kOk;
}

int check_cmd(const RunConfig& cfg, const fs::path& out, std::ostream& err) {
  const SchedulePair pair = cfg.pair();
  const ValidationReport rep = validate_schedule(pair);
  const PulseShape shape(pair);
  double max_residual = 0.0;
  for (int i = 1; i < cfg.grid_n; ++i) {
    max_residual = std::max(max_residual, invariant_residual(shape, pair, static_cast<double>(i) / cfg.grid_n));
  }
  Summary s;
  add_header(s, "check", cfg);
  add(s, "omega_r_nonnegative", std::string(rep.omega_r_nonnegative ? "true" : "false"));
  add(s, "delta_finite", std::string(rep.delta_finite ? "true" : "false"));
  add(s, "gamma_range_ok", std::string(rep.gamma_range_ok ? "true" : "false"));
  add(s, "max_residual", max_residual);
  add(s, "max_adiabaticity_metric", rep.max_adiabaticity_metric);
  for (std::size_t i = 0; i < rep.messages.size(); ++i) {
    add(s, "message." + std::to_string(i), rep.messages[i]);
  }
  write_summary(out / "summary.txt", s);
  if (!rep.ok()) {
    err << "error: schedule failed validation: "
        << (rep.messages.empty() ? std::string("see summary") : rep.messages.front()) << '\n';
    return kInfeasible;
  }
  return kOk;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

int run(const std::string& subcommand, const fs::path& config_path, const fs::path& out_dir,
        std::ostream& err) {
  try {
    if (subcommand != "synth" && subcommand != "evolve" && subcommand != "sweep" && subcommand != "check") {
      throw ConfigError("unknown subcommand '" + subcommand + "'");
    }
    const RunConfig cfg = load_config(config_path);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + out_dir.string() + "'");

    if (subcommand == "synth") return synth(cfg, out_dir, err);
    if (subcommand == "evolve") return evolve_cmd(cfg, out_dir, err);
    if (subcommand == "sweep") return sweep_cmd(cfg, out_dir);
    return check_cmd(cfg, out_dir, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const UnphysicalSchedule& e) {
    err << "infeasible schedule: " << e.what() << '\n';
    return kInfeasible;
  } catch (const NoFeasiblePoint& e) {
    err << "infeasible schedule: " << e.what() << '\n';
    return kInfeasible;
  } catch (const NoCrossing& e) {
    err << "infeasible schedule: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace lrinv::cli
