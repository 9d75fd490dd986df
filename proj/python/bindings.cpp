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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrinv/analysis.hpp"
#include "lrinv/dynamics.hpp"
#include "lrinv/errors.hpp"
#include "lrinv/poly.hpp"
#include "lrinv/pulse.hpp"
#include "lrinv/schedule.hpp"

namespace py = pybind11;
using namespace lrinv;

namespace {

Branch branch_from(int sign) {
  if (sign == 1) return Branch::plus;
  if (sign == -1) return Branch::minus;
  throw std::invalid_argument("branch must be +1 or -1");
}

// (n, 2, 2) complex array of the sampled states plus the time axis.
py::dict trajectory_dict(const Trajectory& tr) {
  const auto n = static_cast<py::ssize_t>(tr.samples.size());
  py::array_t<double> t(n), fid(n), bloch({n, py::ssize_t{3}});
  py::array_t<std::complex<double>> rho({n, py::ssize_t{2}, py::ssize_t{2}});
  auto tv = t.mutable_unchecked<1>();
  auto fv = fid.mutable_unchecked<1>();
  auto bv = bloch.mutable_unchecked<2>();
  auto rv = rho.mutable_unchecked<3>();
  for (py::ssize_t i = 0; i < n; ++i) {
    const auto& s = tr.samples[static_cast<std::size_t>(i)];
    tv(i) = s.t;
    fv(i) = s.fidelity_to_target;
    bv(i, 0) = s.bloch.x;
    bv(i, 1) = s.bloch.y;
    bv(i, 2) = s.bloch.z;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) rv(i, a, b) = s.rho(a, b);
  }
  py::dict d;
  d["t"] = t;
  d["rho"] = rho;
  d["bloch"] = bloch;
  d["fidelity"] = fid;
  return d;
}

DensityMatrix density_from(const Matrix2c& m) { return DensityMatrix(m); }

}  // namespace

PYBIND11_MODULE(_lrinv, m) {
  m.doc() = "Invariant-based inverse engineering of two-level control pulses";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SingularSystem>(m, "SingularSystem", error.ptr());
  py::register_exception<UnphysicalSchedule>(m, "UnphysicalSchedule", error.ptr());
  py::register_exception<NoCrossing>(m, "NoCrossing", error.ptr());
  py::register_exception<DivergentPulse>(m, "DivergentPulse", error.ptr());
  py::register_exception<DegeneratePoint>(m, "DegeneratePoint", error.ptr());
  py::register_exception<StepTooCoarse>(m, "StepTooCoarse", error.ptr());
  py::register_exception<NoFeasiblePoint>(m, "NoFeasiblePoint", error.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<std::vector<double>>(), py::arg("coefficients"))
      .def_property_readonly("coefficients", &Polynomial::coefficients)
      .def("__call__", [](const Polynomial& p, double s) { return p(s); })
      .def("derivative", [](const Polynomial& p) { return derivative(p); })
      .def("__repr__", [](const Polynomial& p) {
        return "Polynomial(" + py::repr(py::cast(p.coefficients())).cast<std::string>() + ")";
      });

  py::class_<Condition>(m, "Condition")
      .def(py::init<double, int, double>(), py::arg("s"), py::arg("derivative_order"), py::arg("value"))
      .def_readonly("s", &Condition::s)
      .def_readonly("derivative_order", &Condition::derivative_order)
      .def_readonly("value", &Condition::value);

  m.def("fit", [](const std::vector<Condition>& c, int degree) { return fit(c, degree); }, py::arg("conditions"),
        py::arg("degree"));
  m.def("real_roots", &real_roots, py::arg("p"), py::arg("lo"), py::arg("hi"), py::arg("cells") = 4096);

  py::enum_<Family>(m, "Family")
      .value("third_order", Family::third_order)
      .value("fourth_order", Family::fourth_order)
      .value("antedated", Family::antedated);

  py::class_<SchedulePair>(m, "SchedulePair")
      .def_readonly("family", &SchedulePair::family)
      .def_readonly("gamma", &SchedulePair::gamma)
      .def_readonly("beta", &SchedulePair::beta)
      .def_readonly("t_f", &SchedulePair::t_f)
      .def_readonly("t_a", &SchedulePair::t_a)
      .def_readonly("beta_dot0", &SchedulePair::beta_dot0)
      .def_property_readonly("s_end", &SchedulePair::s_end)
      .def_property_readonly("beta_dot0_units", &SchedulePair::beta_dot0_units);

  m.def("third_order_pair", &third_order_pair, py::arg("t_f") = 1.0);
  m.def(
      "fourth_order_pair",
      [](double t_f, double gamma_mid, bool check) {
        return fourth_order_pair(t_f, gamma_mid, check ? Checks::enforce : Checks::skip);
      },
      py::arg("t_f"), py::arg("gamma_mid"), py::arg("check") = true);
  m.def(
      "antedated_pair",
      [](double t_f, double t_a, double beta_dot0_units, bool check) {
        return antedated_pair_units(t_f, t_a, beta_dot0_units, check ? Checks::enforce : Checks::skip);
      },
      py::arg("t_f"), py::arg("t_a"), py::arg("beta_dot0_units") = 1.0, py::arg("check") = true,
      "beta_dot0_units is beta'(0) in units of pi/(2 t_f)");
  m.def("gamma_dot_zero_crossing", &gamma_dot_zero_crossing, py::arg("gamma"));
  m.def("critical_gamma_mid", &critical_gamma_mid);

  m.def("omega_r_at", &omega_r_at, py::arg("pair"), py::arg("s"));
  m.def("delta_at", &delta_at, py::arg("pair"), py::arg("s"));
  m.def(
      "synthesize",
      [](const SchedulePair& pair, int n) {
        const PulseTable table = synthesize(pair, n);
        const auto len = static_cast<py::ssize_t>(table.samples.size());
        py::array_t<double> t(len), om(len), de(len);
        auto tv = t.mutable_unchecked<1>();
        auto ov = om.mutable_unchecked<1>();
        auto dv = de.mutable_unchecked<1>();
        for (py::ssize_t i = 0; i < len; ++i) {
          const auto& s = table.samples[static_cast<std::size_t>(i)];
          tv(i) = s.t;
          ov(i) = s.omega_r;
          dv(i) = s.delta;
        }
        py::dict d;
        d["t"] = t;
        d["omega_r"] = om;
        d["delta"] = de;
        return d;
      },
      py::arg("pair"), py::arg("n"));
  m.def("adiabaticity_metric", py::overload_cast<const SchedulePair&, double>(&adiabaticity_metric),
        py::arg("pair"), py::arg("s"));
  m.def(
      "lr_phase", [](const SchedulePair& p, double t, int branch) { return lr_phase(p, t, branch_from(branch)); },
      py::arg("pair"), py::arg("t"), py::arg("branch") = 1);

  m.def("hamiltonian_at", py::overload_cast<const SchedulePair&, double>(&hamiltonian_at), py::arg("pair"),
        py::arg("s"));
  m.def("invariant_at", &invariant_at, py::arg("pair"), py::arg("s"));
  m.def("invariant_residual", py::overload_cast<const SchedulePair&, double>(&invariant_residual),
        py::arg("pair"), py::arg("s"));
  m.def(
      "invariant_state",
      [](const SchedulePair& p, double s, double p_plus, double p_minus) {
        return invariant_state(p, Weights(p_plus, p_minus), s).matrix();
      },
      py::arg("pair"), py::arg("s"), py::arg("p_plus") = 0.2, py::arg("p_minus") = 0.8);
  m.def(
      "adiabatic_state",
      [](const SchedulePair& p, double s, double p_plus, double p_minus) {
        return adiabatic_state(p, Weights(p_plus, p_minus), s).matrix();
      },
      py::arg("pair"), py::arg("s"), py::arg("p_plus") = 0.2, py::arg("p_minus") = 0.8);
  m.def(
      "fidelity", [](const Matrix2c& a, const Matrix2c& b) { return fidelity(density_from(a), density_from(b)); },
      py::arg("rho"), py::arg("sigma"));
  m.def(
      "evolve",
      [](const SchedulePair& p, const Matrix2c& rho0, int n_steps) {
        Trajectory tr;
        {
          py::gil_scoped_release release;
          tr = evolve(p, density_from(rho0), n_steps);
        }
        return trajectory_dict(tr);
      },
      py::arg("pair"), py::arg("rho0"), py::arg("n_steps") = 10000);

  m.def("energy_cost", py::overload_cast<const SchedulePair&>(&energy_cost), py::arg("pair"));
  m.def(
      "validate_schedule",
      [](const SchedulePair& p) {
        const ValidationReport r = validate_schedule(p);
        py::dict d;
        d["ok"] = r.ok();
        d["omega_r_nonnegative"] = r.omega_r_nonnegative;
        d["delta_finite"] = r.delta_finite;
        d["gamma_range_ok"] = r.gamma_range_ok;
        d["max_adiabaticity_metric"] = r.max_adiabaticity_metric;
        d["messages"] = r.messages;
        return d;
      },
      py::arg("pair"));
  m.def(
      "sweep_beta_dot0",
      [](double t_f, double t_a, double lo, double hi, int n, int workers) {
        SweepResult r;
        {
          py::gil_scoped_release release;
          r = sweep_beta_dot0(t_f, t_a, lo, hi, n, workers);
        }
        std::vector<double> xs, costs;
        for (const auto& p : r.grid) {
          xs.push_back(p.beta_dot0_units);
          costs.push_back(p.cost);
        }
        py::dict d;
        d["beta_dot0_units"] = py::array(py::cast(xs));
        d["cost"] = py::array(py::cast(costs));
        d["min_cost"] = r.min_cost;
        d["argmin_beta_dot0_units"] = r.argmin_beta_dot0_units;
        d["infeasible_points"] = r.infeasible_points;
        return d;
      },
      py::arg("t_f"), py::arg("t_a"), py::arg("lo") = 0.1, py::arg("hi") = 8.0, py::arg("n") = 200,
      py::arg("workers") = 0);
}
