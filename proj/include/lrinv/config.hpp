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

#include <filesystem>
#include <optional>
#include <string_view>

#include "lrinv/dynamics.hpp"
#include "lrinv/schedule.hpp"

namespace lrinv {

struct SweepConfig {
  double lo = 0.1;
  double hi = 8.0;
  int n = 200;
};

/// Run configuration. Read from a flat `key = value` file; `#` starts a
/// comment. Numeric values accept `pi`, `*` and `/`, e.g. `2*pi/5`.
///
///   t_f, p_plus, p_minus, family (third | fourth | antedated),
///   gamma_mid, t_a, beta_dot0 (units of π/2t_f), grid_n, rk4_steps,
///   sweep.lo, sweep.hi, sweep.n
struct RunConfig {
  double t_f = 1.0;
  double p_plus = 0.2;
  double p_minus = 0.8;
  Family family = Family::third_order;
  std::optional<double> gamma_mid;
  std::optional<double> t_a;
  std::optional<double> beta_dot0_units;
  int grid_n = 1000;
  int rk4_steps = 10000;
  std::optional<SweepConfig> sweep;

  Weights weights() const { return Weights(p_plus, p_minus); }
  /// Builds the configured pair; schedule errors propagate.
  SchedulePair pair() const;
};

/// Throws ConfigError on syntax errors, unknown or duplicate keys, and
/// missing or misplaced family-specific fields.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Evaluates a numeric config value.
double parse_number(std::string_view text);

}  // namespace lrinv
