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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lrinv/quadrature.hpp"

using namespace lrinv;

TEST_CASE("adaptive Simpson on smooth integrands") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return x * x; }, 1.0, 1.0, 1e-12) == 0.0);
  CHECK(integrate([](double x) { return std::exp(x); }, 1.0, 0.0, 1e-12) ==
        doctest::Approx(1.0 - std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("rounding noise above the tolerance still terminates") {
  long evals = 0;
  // deterministic ±1e-9 jitter, far above the requested 1e-13
  const double v = integrate(
      [&](double x) {
        ++evals;
        const double jitter = std::sin(1e7 * x) > 0 ? 1e-9 : -1e-9;
        return 1.0 + jitter;
      },
      0.0, 1.0, 1e-13);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(evals < 100'000'000);
}

TEST_CASE("golden-section search") {
  const Minimum1d m = golden_section([](double x) { return (x - 0.3) * (x - 0.3) + 2.0; }, 0.0, 1.0, 1e-9);
  CHECK(m.x == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(m.value == doctest::Approx(2.0));
}
