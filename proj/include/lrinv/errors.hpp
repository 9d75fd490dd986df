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

#include <stdexcept>
#include <string>

namespace lrinv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Constraint matrix of a polynomial fit is rank-deficient.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// A schedule violates a physical requirement (negative γ, γ < −π, poles).
class UnphysicalSchedule : public Error {
 public:
  using Error::Error;
};

/// γ̇ has no interior sign change.
class NoCrossing : public Error {
 public:
  using Error::Error;
};

/// Ω_R or Δ diverges at normalized time `s`.
class DivergentPulse : public Error {
 public:
  DivergentPulse(const std::string& what, double s) : Error(what), s_(s) {}
  double s() const noexcept { return s_; }

 private:
  double s_;
};

/// Generalized Rabi frequency vanishes; quantity undefined at a level crossing.
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

/// Integrator drift (trace or Hermiticity) exceeded its budget.
class StepTooCoarse : public Error {
 public:
  using Error::Error;
};

/// Every sweep point failed validation.
class NoFeasiblePoint : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lrinv
