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

#include <Eigen/Dense>

#include "lrinv/pulse.hpp"
#include "lrinv/schedule.hpp"

namespace lrinv {

using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const noexcept;
};

/// Occupations of the invariant eigenstates |φ_+⟩, |φ_−⟩.
class Weights {
 public:
  /// Defaults to p_+ = 0.2, p_− = 0.8.
  Weights() = default;
  /// Throws std::invalid_argument unless both lie in [0, 1] and sum to 1.
  Weights(double p_plus, double p_minus);

  double p_plus() const noexcept { return p_plus_; }
  double p_minus() const noexcept { return p_minus_; }
  double polarization() const noexcept { return p_plus_ - p_minus_; }

 private:
  double p_plus_ = 0.2;
  double p_minus_ = 0.8;
};

/// 2×2 Hermitian, unit-trace, positive-semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity and trace to kTolerance and eigenvalues ≥ −1e−10.
  explicit DensityMatrix(const Matrix2c& m);
  static DensityMatrix from_bloch(const BlochVector& r);
  static DensityMatrix maximally_mixed();

  static constexpr double kTolerance = 1e-12;

  const Matrix2c& matrix() const noexcept { return m_; }
  std::complex<double> operator()(int i, int j) const { return m_(i, j); }
  BlochVector bloch() const noexcept;
  double purity() const noexcept;

 private:
  Matrix2c m_;
};

Matrix2c commutator(const Matrix2c& a, const Matrix2c& b);

/// ½[[Δ, Ω_R], [Ω_R, −Δ]] in physical units, switched to diag(Δ(t_a), −Δ(t_a))/2
/// after an antedated switch.
Matrix2c hamiltonian_at(const PulseShape& shape, double s);
Matrix2c hamiltonian_at(const SchedulePair& pair, double s);
/// The constant diagonal Hamiltonian that takes over at t_a.
Matrix2c switched_hamiltonian(const SchedulePair& pair);

/// ½[[cos γ, e^{iβ} sin γ], [e^{−iβ} sin γ, −cos γ]]; frozen at I(t_a) after a switch.
Matrix2c invariant_at(const SchedulePair& pair, double s);

/// Eigenstates of the invariant:
///   |φ_+⟩ = (cos(γ/2) e^{iβ}, sin(γ/2)),  |φ_−⟩ = (sin(γ/2), −cos(γ/2) e^{−iβ}).
Vector2c invariant_eigenstate(const SchedulePair& pair, double s, Branch branch);

/// ‖i ∂I/∂t − [H, I]‖_F · t_f, with H from `drive` and I from `invariant`.
/// The two-argument form checks a pair against itself.
double invariant_residual(const PulseShape& drive, const SchedulePair& invariant, double s);
double invariant_residual(const SchedulePair& pair, double s);

/// ρ^I(s) = Σ p_± |φ_±⟩⟨φ_±|.
DensityMatrix invariant_state(const SchedulePair& pair, const Weights& w, double s);

/// ½I + (p_+ − p_−)/2 (sin θ σ_x + cos θ σ_z), θ = arccos(Δ/Ω).
DensityMatrix adiabatic_state(const PulseShape& shape, const Weights& w, double s);
DensityMatrix adiabatic_state(const SchedulePair& pair, const Weights& w, double s);

/// Uhlmann fidelity, closed form for qubits: tr(ρσ) + 2√(det ρ det σ).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

struct TrajectorySample {
  double t;
  DensityMatrix rho;
  BlochVector bloch;
  double fidelity_to_target;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

/// Fixed-step RK4 integration of i dρ/dt = [H(t), ρ] over [0, t_f], one sample
/// per step. An antedated switch splits the grid so t_a is a step boundary.
/// Fidelity is measured against `target`, defaulting to ρ^I at the end of the
/// passage for the weights ⟨φ_±(0)|ρ0|φ_±(0)⟩.
Trajectory evolve(const PulseShape& shape, const DensityMatrix& rho0, int n_steps,
                  std::optional<DensityMatrix> target = std::nullopt);
Trajectory evolve(const SchedulePair& pair, const DensityMatrix& rho0, int n_steps,
                  std::optional<DensityMatrix> target = std::nullopt);

struct PureSample {
  double t;
  Vector2c psi;
};

/// RK4 integration of i d|ψ⟩/dt = H|ψ⟩ from |φ_branch(0)⟩.
std::vector<PureSample> evolve_pure(const PulseShape& shape, Branch branch, int n_steps);
std::vector<PureSample> evolve_pure(const SchedulePair& pair, Branch branch, int n_steps);

}  // namespace lrinv
