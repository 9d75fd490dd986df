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

#include "lrinv/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lrinv/errors.hpp"
#include "lrinv/quadrature.hpp"

namespace lrinv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kSeriesOrder = 20;
constexpr double kMaxSeriesRadius = 1e-3;
constexpr double kFdStep = 1e-6;

// Zeros of sin(p) on [0, 1]: roots of p - kπ for each multiple of π in range.
void append_sine_zeros(const Polynomial& p, std::vector<double>& out) {
  const double lo = minimum(p, 0.0, 1.0, 2000).value;
  const double hi = maximum(p, 0.0, 1.0, 2000).value;
  const auto k_lo = static_cast<long>(std::floor(lo / kPi)) - 1;
  const auto k_hi = static_cast<long>(std::ceil(hi / kPi)) + 1;
  for (long k = k_lo; k <= k_hi; ++k) {
    const auto roots = real_roots(p + (-static_cast<double>(k) * kPi), 0.0, 1.0);
    out.insert(out.end(), roots.begin(), roots.end());
  }
}

[[noreturn]] void diverge(const char* what, double s) {
  throw DivergentPulse(std::string(what) + " diverges at s = " + std::to_string(s), s);
}

}  // namespace

PulseShape::PulseShape(const SchedulePair& pair)
    : pair_(pair), gamma_dot_(derivative(pair.gamma)), beta_dot_(derivative(pair.beta)) {
  std::vector<double> points;
  append_sine_zeros(pair_.gamma, points);
  append_sine_zeros(pair_.beta, points);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-9; }),
               points.end());

  singular_.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double s = points[i];
    double gap = 1.0;
    if (i > 0) gap = std::min(gap, s - points[i - 1]);
    if (i + 1 < points.size()) gap = std::min(gap, points[i + 1] - s);

    const SinCos g = sincos_of(pair_.gamma, s, kSeriesOrder);
    const SinCos b = sincos_of(pair_.beta, s, kSeriesOrder);
    const Series gd = Series::of(gamma_dot_, s, kSeriesOrder);
    singular_.push_back(Singular{
        s,
        std::min(kMaxSeriesRadius, 0.4 * gap),
        quotient(gd, b.sin),
        quotient(gd * g.cos * b.cos, g.sin * b.sin),
    });
  }

  if (const auto sa = pair_.s_switch()) {
    try {
      delta_switch_ = delta(*sa);
    } catch (const DivergentPulse&) {
      delta_switch_.reset();
    }
  }
}

const PulseShape::Singular* PulseShape::near(double s) const {
  const Singular* best = nullptr;
  for (const auto& sp : singular_) {
    const double d = std::abs(s - sp.s);
    if (d <= sp.radius && (!best || d < std::abs(s - best->s))) best = &sp;
  }
  return best;
}

double PulseShape::omega_r(double s) const {
  if (const Singular* sp = near(s)) {
    if (sp->omega_r) return (*sp->omega_r)(s - sp->s);
    if (s == sp->s) diverge("Omega_R", s);
  }
  const double sb = sincos_at(pair_.beta, s).sin;
  if (sb == 0.0) diverge("Omega_R", s);
  return gamma_dot_(s) / sb;
}

double PulseShape::cot_term(double s) const {
  if (const Singular* sp = near(s)) {
    if (sp->cot_term) return (*sp->cot_term)(s - sp->s);
    if (s == sp->s) diverge("Delta", s);
  }
  const SinCosValue g = sincos_at(pair_.gamma, s);
  const SinCosValue b = sincos_at(pair_.beta, s);
  const double den = g.sin * b.sin;
  if (den == 0.0) diverge("Delta", s);
  return gamma_dot_(s) * g.cos * b.cos / den;
}

double PulseShape::delta(double s) const { return cot_term(s) - beta_dot_(s); }

Drive PulseShape::drive(double s) const {
  if (const auto sa = pair_.s_switch(); sa && s > *sa) return switched_drive();
  return {omega_r(s), delta(s)};
}

Drive PulseShape::switched_drive() const {
  const auto sa = pair_.s_switch();
  if (!sa) throw std::logic_error("switched_drive: pair has no switch time");
  if (!delta_switch_) diverge("Delta", *sa);
  return {0.0, *delta_switch_};
}

double PulseShape::phase_rate(double s) const {
  if (const auto sa = pair_.s_switch(); sa && s > *sa) return switched_drive().delta;
  const SinCosValue g = sincos_at(pair_.gamma, s);
  const SinCosValue b = sincos_at(pair_.beta, s);
  return cot_term(s) * g.cos + beta_dot_(s) + omega_r(s) * g.sin * b.cos;
}

std::vector<double> PulseShape::singular_points() const {
  std::vector<double> out;
  out.reserve(singular_.size());
  for (const auto& sp : singular_) out.push_back(sp.s);
  return out;
}

std::vector<double> PulseShape::poles() const {
  std::vector<double> out;
  for (const auto& sp : singular_) {
    if (!sp.omega_r || !sp.cot_term) out.push_back(sp.s);
  }
  return out;
}

double generalized_rabi(const Drive& d) noexcept { return std::hypot(d.omega_r, d.delta); }

double omega_r_at(const SchedulePair& pair, double s) {
  return PulseShape(pair).omega_r(s) / pair.t_f;
}

double delta_at(const SchedulePair& pair, double s) {
  return PulseShape(pair).delta(s) / pair.t_f;
}

PulseTable synthesize(const SchedulePair& pair, int n) {
  if (n < 2) throw std::invalid_argument("synthesize: need n >= 2");
  const PulseShape shape(pair);
  PulseTable table{pair.t_f, pair.t_a, {}};
  table.samples.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double s = static_cast<double>(i) / n;
    const Drive d = shape.drive(s);
    table.samples.push_back({s * pair.t_f, d.omega_r / pair.t_f, d.delta / pair.t_f});
  }
  return table;
}

double adiabaticity_metric(const PulseShape& shape, double s) {
  if (const auto sa = shape.pair().s_switch(); sa && s > *sa) return 0.0;
  const double om = shape.omega_r(s);
  const double de = shape.delta(s);
  const double omega = std::hypot(om, de);
  if (omega < 1e-12) throw DegeneratePoint("adiabaticity metric undefined where Omega = 0");
  const double dom = (shape.omega_r(s + kFdStep) - shape.omega_r(s - kFdStep)) / (2 * kFdStep);
  const double dde = (shape.delta(s + kFdStep) - shape.delta(s - kFdStep)) / (2 * kFdStep);
  return std::abs(om * dde - dom * de) / (omega * omega * omega);
}

double adiabaticity_metric(const SchedulePair& pair, double s) {
  return adiabaticity_metric(PulseShape(pair), s);
}

double lr_phase(const PulseShape& shape, double t, Branch branch) {
  const SchedulePair& pair = shape.pair();
  const double s = t / pair.t_f;
  if (!(s >= -1e-12 && s <= 1.0 + 1e-12)) throw std::invalid_argument("lr_phase: t outside [0, t_f]");
  const double s_clamped = std::clamp(s, 0.0, 1.0);
  const double s_active = std::min(s_clamped, pair.s_end());
  double area = integrate([&](double x) { return shape.phase_rate(x); }, 0.0, s_active, 1e-10);
  if (s_clamped > s_active) area += (s_clamped - s_active) * shape.phase_rate(1.0);
  return (branch == Branch::plus ? -0.5 : 0.5) * area;
}

double lr_phase(const SchedulePair& pair, double t, Branch branch) {
  return lr_phase(PulseShape(pair), t, branch);
}

}  // namespace lrinv
