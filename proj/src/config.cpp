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

#include "lrinv/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "lrinv/errors.hpp"

namespace lrinv {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_factor(std::string_view tok, std::string_view whole) {
  tok = trim(tok);
  double sign = 1.0;
  if (!tok.empty() && (tok.front() == '-' || tok.front() == '+')) {
    if (tok.front() == '-') sign = -1.0;
    tok = trim(tok.substr(1));
  }
  if (tok == "pi") return sign * std::numbers::pi;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ConfigError("malformed number '" + std::string(whole) + "'");
  }
  return sign * v;
}

int parse_int(std::string_view text, std::string_view key) {
  const double v = parse_number(text);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw ConfigError(std::string(key) + " must be an integer");
  }
  return static_cast<int>(v);
}

const std::set<std::string, std::less<>> kKeys = {
    "t_f",    "p_plus", "p_minus",   "family",  "gamma_mid", "t_a",     "beta_dot0",
    "grid_n", "rk4_steps", "sweep.lo", "sweep.hi", "sweep.n",
};

}  // namespace

double parse_number(std::string_view text) {
  const std::string_view whole = trim(text);
  if (whole.empty()) throw ConfigError("empty numeric value");
  // factor (('*' | '/') factor)*, left to right
  double acc = 0.0;
  char op = '*';
  bool first = true;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= whole.size(); ++i) {
    if (i < whole.size() && whole[i] != '*' && whole[i] != '/') continue;
    const double f = parse_factor(whole.substr(start, i - start), whole);
    if (first) {
      acc = f;
      first = false;
    } else if (op == '*') {
      acc *= f;
    } else {
      if (f == 0.0) throw ConfigError("division by zero in '" + std::string(whole) + "'");
      acc /= f;
    }
    if (i < whole.size()) op = whole[i];
    start = i + 1;
  }
  if (!std::isfinite(acc)) throw ConfigError("non-finite value '" + std::string(whole) + "'");
  return acc;
}

RunConfig parse_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = line;
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key(trim(l.substr(0, eq)));
    const std::string value(trim(l.substr(eq + 1)));
    if (!kKeys.contains(key)) throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (!kv.emplace(key, value).second) {
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }

  RunConfig cfg;
  auto num = [&](std::string_view key) -> std::optional<double> {
    const auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return parse_number(it->second);
  };
  if (auto v = num("t_f")) cfg.t_f = *v;
  if (!(cfg.t_f > 0.0)) throw ConfigError("t_f must be positive");

  const auto pp = num("p_plus");
  const auto pm = num("p_minus");
  if (pp && pm) {
    cfg.p_plus = *pp;
    cfg.p_minus = *pm;
  } else if (pp) {
    cfg.p_plus = *pp;
    cfg.p_minus = 1.0 - *pp;
  } else if (pm) {
    cfg.p_minus = *pm;
    cfg.p_plus = 1.0 - *pm;
  }
  if (cfg.p_plus < 0.0 || cfg.p_minus < 0.0 || std::abs(cfg.p_plus + cfg.p_minus - 1.0) > 1e-12) {
    throw ConfigError("weights must be nonnegative and sum to 1");
  }

  if (const auto it = kv.find("family"); it != kv.end()) {
    if (it->second == "third") {
      cfg.family = Family::third_order;
    } else if (it->second == "fourth") {
      cfg.family = Family::fourth_order;
    } else if (it->second == "antedated") {
      cfg.family = Family::antedated;
    } else {
      throw ConfigError("family must be third, fourth or antedated, got '" + it->second + "'");
    }
  }
  cfg.gamma_mid = num("gamma_mid");
  cfg.t_a = num("t_a");
  cfg.beta_dot0_units = num("beta_dot0");

  switch (cfg.family) {
    case Family::third_order:
      if (cfg.gamma_mid || cfg.t_a || cfg.beta_dot0_units) {
        throw ConfigError("family third takes no gamma_mid, t_a or beta_dot0");
      }
      break;
    case Family::fourth_order:
      if (!cfg.gamma_mid) throw ConfigError("family fourth requires gamma_mid");
      if (cfg.t_a || cfg.beta_dot0_units) throw ConfigError("family fourth takes no t_a or beta_dot0");
      break;
    case Family::antedated:
      if (!cfg.t_a) throw ConfigError("family antedated requires t_a");
      if (cfg.gamma_mid) throw ConfigError("family antedated takes no gamma_mid");
      if (!(*cfg.t_a > 0.0 && *cfg.t_a < cfg.t_f)) throw ConfigError("t_a must lie in (0, t_f)");
      break;
  }

  if (const auto it = kv.find("grid_n"); it != kv.end()) cfg.grid_n = parse_int(it->second, "grid_n");
  if (const auto it = kv.find("rk4_steps"); it != kv.end()) cfg.rk4_steps = parse_int(it->second, "rk4_steps");
  if (cfg.grid_n < 2) throw ConfigError("grid_n must be at least 2");
  if (cfg.rk4_steps < 100) throw ConfigError("rk4_steps must be at least 100");

  if (kv.contains("sweep.lo") || kv.contains("sweep.hi") || kv.contains("sweep.n")) {
    SweepConfig sw;
    if (auto v = num("sweep.lo")) sw.lo = *v;
    if (auto v = num("sweep.hi")) sw.hi = *v;
    if (const auto it = kv.find("sweep.n"); it != kv.end()) sw.n = parse_int(it->second, "sweep.n");
    if (!(sw.lo < sw.hi)) throw ConfigError("sweep.lo must be below sweep.hi");
    if (sw.n < 10) throw ConfigError("sweep.n must be at least 10");
    cfg.sweep = sw;
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

SchedulePair RunConfig::pair() const {
  switch (family) {
    case Family::third_order: return third_order_pair(t_f);
    case Family::fourth_order: return fourth_order_pair(t_f, *gamma_mid);
    case Family::antedated: return antedated_pair_units(t_f, *t_a, beta_dot0_units.value_or(1.0));
  }
  throw ConfigError("unknown family");
}

}  // namespace lrinv
