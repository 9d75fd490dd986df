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

#include "lrinv/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "lrinv/errors.hpp"
#include "lrinv/series.hpp"

namespace lrinv {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

// γ, β and their s-derivatives, frozen at the switch for antedated pairs.
struct Angles {
  double gamma;
  double beta;
  double gamma_dot;
  double beta_dot;
};

Angles angles_at(const SchedulePair& pair, double s) {
  if (const auto sa = pair.s_switch(); sa && s > *sa) {
    return {pair.gamma(*sa), pair.beta(*sa), 0.0, 0.0};
  }
  return {pair.gamma(s), pair.beta(s), pair.gamma.derivative_at(s, 1), pair.beta.derivative_at(s, 1)};
}

Matrix2c from_drive(const Drive& d) {
  Matrix2c h;
  h << d.delta, d.omega_r, d.omega_r, -d.delta;
  return 0.5 * h;
}

Matrix2c invariant_from(double gamma, double beta) {
  const double c = std::cos(gamma);
  const double sn = std::sin(gamma);
  const cd e = std::polar(1.0, beta);
  Matrix2c m;
  m << c, e * sn, std::conj(e) * sn, -c;
  return 0.5 * m;
}

Vector2c eigenstate_from(double gamma, double beta, Branch branch) {
  const double c = std::cos(0.5 * gamma);
  const double sn = std::sin(0.5 * gamma);
  Vector2c v;
  if (branch == Branch::plus) {
    v << c * std::polar(1.0, beta), sn;
  } else {
    v << sn, -c * std::polar(1.0, -beta);
  }
  return v;
}

DensityMatrix mixture(const Angles& a, const Weights& w) {
  const Vector2c plus = eigenstate_from(a.gamma, a.beta, Branch::plus);
  const Vector2c minus = eigenstate_from(a.gamma, a.beta, Branch::minus);
  const Matrix2c m = w.p_plus() * plus * plus.adjoint() + w.p_minus() * minus * minus.adjoint();
  return DensityMatrix(m);
}

// H in units of 1/t_f; `after_switch` selects the static Hamiltonian even at s = s_a.
Matrix2c scaled_hamiltonian(const PulseShape& shape, double s, bool after_switch) {
  return from_drive(after_switch ? shape.switched_drive() : shape.drive(s));
}

// Step counts for [0, s_a] and [s_a, 1]; a single segment without a switch.
std::vector<std::pair<double, int>> segments(const SchedulePair& pair, int n_steps) {
  const auto sa = pair.s_switch();
  if (!sa) return {{1.0, n_steps}};
  const int first = std::clamp(static_cast<int>(std::lround(n_steps * *sa)), 1, n_steps - 1);
  return {{*sa, first}, {1.0, n_steps - first}};
}

void require_steps(int n_steps) {
  if (n_steps < 100) throw std::invalid_argument("need at least 100 integration steps");
}

// Integrates dy/ds = f(s, y) with RK4 over the segmented grid; `observe(s, y)`
// is called at every grid point including s = 0.
template <typename State, typename Rhs, typename Observe>
void integrate_rk4(const PulseShape& shape, int n_steps, State y, Rhs rhs, Observe observe) {
  observe(0.0, y, false);
  double s0 = 0.0;
  bool after_switch = false;
  for (const auto& [s1, steps] : segments(shape.pair(), n_steps)) {
    const double h = (s1 - s0) / steps;
    for (int i = 0; i < steps; ++i) {
      const double s = s0 + h * i;
      const double s_next = i + 1 == steps ? s1 : s0 + h * (i + 1);
      const double s_mid = s + 0.5 * h;
      const Matrix2c h0 = scaled_hamiltonian(shape, s, after_switch);
      const Matrix2c hm = scaled_hamiltonian(shape, s_mid, after_switch);
      const Matrix2c h1 = scaled_hamiltonian(shape, s_next, after_switch);
      const State k1 = rhs(h0, y);
      const State k2 = rhs(hm, State(y + 0.5 * h * k1));
      const State k3 = rhs(hm, State(y + 0.5 * h * k2));
      const State k4 = rhs(h1, State(y + h * k3));
      y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      observe(s_next, y, after_switch);
    }
    s0 = s1;
    after_switch = true;
  }
}

}  // namespace

double BlochVector::norm() const noexcept { return std::sqrt(x * x + y * y + z * z); }

Weights::Weights(double p_plus, double p_minus) : p_plus_(p_plus), p_minus_(p_minus) {
  if (!(p_plus >= 0.0 && p_plus <= 1.0 && p_minus >= 0.0 && p_minus <= 1.0) ||
      std::abs(p_plus + p_minus - 1.0) > 1e-12) {
    throw std::invalid_argument("weights must lie in [0, 1] and sum to 1");
  }
}

DensityMatrix::DensityMatrix(const Matrix2c& m) : m_(m) {
  if (!m.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kTolerance) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - 1.0) > kTolerance) throw std::invalid_argument("density matrix trace != 1");
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double lowest = 0.5 * (a + d) - std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
  if (lowest < -1e-10) throw std::invalid_argument("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::from_bloch(const BlochVector& r) {
  Matrix2c m;
  m << 1.0 + r.z, cd(r.x, -r.y), cd(r.x, r.y), 1.0 - r.z;
  return DensityMatrix(0.5 * m);
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(0.5 * Matrix2c::Identity()); }

BlochVector DensityMatrix::bloch() const noexcept {
  return {2.0 * m_(0, 1).real(), -2.0 * m_(0, 1).imag(), (m_(0, 0) - m_(1, 1)).real()};
}

double DensityMatrix::purity() const noexcept { return (m_ * m_).trace().real(); }

Matrix2c commutator(const Matrix2c& a, const Matrix2c& b) { return a * b - b * a; }

Matrix2c hamiltonian_at(const PulseShape& shape, double s) {
  return from_drive(shape.drive(s)) / shape.pair().t_f;
}

Matrix2c hamiltonian_at(const SchedulePair& pair, double s) {
  return hamiltonian_at(PulseShape(pair), s);
}

Matrix2c switched_hamiltonian(const SchedulePair& pair) {
  return from_drive(PulseShape(pair).switched_drive()) / pair.t_f;
}

Matrix2c invariant_at(const SchedulePair& pair, double s) {
  const Angles a = angles_at(pair, s);
  return invariant_from(a.gamma, a.beta);
}

Vector2c invariant_eigenstate(const SchedulePair& pair, double s, Branch branch) {
  const Angles a = angles_at(pair, s);
  return eigenstate_from(a.gamma, a.beta, branch);
}

double invariant_residual(const PulseShape& drive, const SchedulePair& invariant, double s) {
  const Angles a = angles_at(invariant, s);
  const Matrix2c inv = invariant_from(a.gamma, a.beta);
  // dI/ds from the exact polynomial derivatives.
  const double sg = std::sin(a.gamma);
  const double cg = std::cos(a.gamma);
  const cd e = std::polar(1.0, a.beta);
  const cd off = e * (kI * a.beta_dot * sg + cg * a.gamma_dot);
  Matrix2c d_inv;
  d_inv << -sg * a.gamma_dot, off, std::conj(off), sg * a.gamma_dot;
  d_inv *= 0.5;
  const Matrix2c h = from_drive(drive.drive(s));
  return (kI * d_inv - commutator(h, inv)).norm();
}

double invariant_residual(const SchedulePair& pair, double s) {
  return invariant_residual(PulseShape(pair), pair, s);
}

DensityMatrix invariant_state(const SchedulePair& pair, const Weights& w, double s) {
  return mixture(angles_at(pair, s), w);
}

DensityMatrix adiabatic_state(const PulseShape& shape, const Weights& w, double s) {
  const Drive d = shape.drive(s);
  const double omega = generalized_rabi(d);
  if (omega < 1e-12) throw DegeneratePoint("mixing angle undefined where Omega = 0");
  const double theta = std::acos(std::clamp(d.delta / omega, -1.0, 1.0));
  const double p = w.polarization();
  return DensityMatrix::from_bloch({p * std::sin(theta), 0.0, p * std::cos(theta)});
}

DensityMatrix adiabatic_state(const SchedulePair& pair, const Weights& w, double s) {
  return adiabatic_state(PulseShape(pair), w, s);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double overlap = (rho.matrix() * sigma.matrix()).trace().real();
  const double dets = std::max(0.0, rho.matrix().determinant().real()) *
                      std::max(0.0, sigma.matrix().determinant().real());
  return std::clamp(overlap + 2.0 * std::sqrt(dets), 0.0, 1.0);
}

Trajectory evolve(const PulseShape& shape, const DensityMatrix& rho0, int n_steps,
                  std::optional<DensityMatrix> target) {
  require_steps(n_steps);
  const SchedulePair& pair = shape.pair();
  if (!target) {
    const Vector2c plus = invariant_eigenstate(pair, 0.0, Branch::plus);
    const double p_plus = std::clamp((plus.adjoint() * rho0.matrix() * plus)(0, 0).real(), 0.0, 1.0);
    target = invariant_state(pair, Weights(p_plus, 1.0 - p_plus), pair.s_end());
  }

  Trajectory traj;
  traj.samples.reserve(static_cast<std::size_t>(n_steps) + 1);
  auto rhs = [](const Matrix2c& h, const Matrix2c& rho) -> Matrix2c { return -kI * commutator(h, rho); };
  auto observe = [&](double s, const Matrix2c& rho, bool) {
    const double drift = std::max(std::abs(rho.trace() - 1.0), (rho - rho.adjoint()).cwiseAbs().maxCoeff());
    if (drift > 1e-8) {
      throw StepTooCoarse("trace/Hermiticity drift " + std::to_string(drift) + " at s = " +
                          std::to_string(s) + "; increase the step count");
    }
    // Rounding leaves ~1e-16 anti-Hermitian residue per step; keep the
    // Hermitian part so samples satisfy the DensityMatrix invariants.
    const DensityMatrix state(0.5 * (rho + rho.adjoint()));
    traj.samples.push_back({s * pair.t_f, state, state.bloch(), fidelity(state, *target)});
  };
  integrate_rk4(shape, n_steps, rho0.matrix(), rhs, observe);
  return traj;
}

Trajectory evolve(const SchedulePair& pair, const DensityMatrix& rho0, int n_steps,
                  std::optional<DensityMatrix> target) {
  return evolve(PulseShape(pair), rho0, n_steps, std::move(target));
}

std::vector<PureSample> evolve_pure(const PulseShape& shape, Branch branch, int n_steps) {
  require_steps(n_steps);
  const SchedulePair& pair = shape.pair();
  std::vector<PureSample> out;
  out.reserve(static_cast<std::size_t>(n_steps) + 1);
  auto rhs = [](const Matrix2c& h, const Vector2c& psi) -> Vector2c { return -kI * (h * psi); };
  auto observe = [&](double s, const Vector2c& psi, bool) {
    if (std::abs(psi.squaredNorm() - 1.0) > 1e-8) {
      throw StepTooCoarse("norm drift at s = " + std::to_string(s) + "; increase the step count");
    }
    out.push_back({s * pair.t_f, psi});
  };
  integrate_rk4(shape, n_steps, invariant_eigenstate(pair, 0.0, branch), rhs, observe);
  return out;
}

std::vector<PureSample> evolve_pure(const SchedulePair& pair, Branch branch, int n_steps) {
  return evolve_pure(PulseShape(pair), branch, n_steps);
}

}  // namespace lrinv
