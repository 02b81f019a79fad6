// Copyright 2026 The symtest Authors
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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "symtest/asymptotics.hpp"
#include "symtest/cli.hpp"
#include "symtest/divergences.hpp"
#include "symtest/error.hpp"
#include "symtest/groups.hpp"
#include "symtest/hypothesis.hpp"
#include "symtest/scenario_io.hpp"
#include "symtest/verify.hpp"

namespace py = pybind11;
using namespace symtest;

namespace {

DensityOperator dm(const ComplexMatrix& m) { return DensityOperator(m); }

GroupAction action_from(const std::vector<ComplexMatrix>& unitaries, const std::vector<long>& weights) {
  if (!unitaries.empty() && !weights.empty()) throw DomainError("give unitaries or weights, not both");
  if (!weights.empty()) return GroupAction::torus(weights);
  if (unitaries.empty()) throw DomainError("an action needs unitaries or weights");
  return GroupAction::finite(unitaries);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "symtest core bindings";

  auto base = py::register_exception<Error>(m, "SymtestError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

  m.def("psi", [](const ComplexMatrix& a, const ComplexMatrix& b, double s) { return psi(dm(a), dm(b), s); },
        py::arg("rho0"), py::arg("rho1"), py::arg("s"));
  m.def("renyi", [](const ComplexMatrix& a, const ComplexMatrix& b, double al) { return renyi(dm(a), dm(b), al); },
        py::arg("rho0"), py::arg("rho1"), py::arg("alpha"));
  m.def("relative_entropy", [](const ComplexMatrix& a, const ComplexMatrix& b) { return relative_entropy(dm(a), dm(b)); });
  m.def("fidelity", [](const ComplexMatrix& a, const ComplexMatrix& b) { return fidelity(dm(a), dm(b)); });
  m.def("chernoff_distance", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return chernoff_distance(psi_curve(dm(a), dm(b), default_s_grid()));
  });
  m.def("hoeffding_distance", [](const ComplexMatrix& a, const ComplexMatrix& b, double r) {
    return hoeffding_distance(psi_curve(dm(a), dm(b), default_s_grid()), r);
  });

  m.def("twirl",
        [](const ComplexMatrix& x, const std::vector<ComplexMatrix>& unitaries, const std::vector<long>& weights,
           int n) { return twirl(x, tensor_power(action_from(unitaries, weights), n)); },
        py::arg("x"), py::arg("unitaries") = std::vector<ComplexMatrix>{}, py::arg("weights") = std::vector<long>{},
        py::arg("n") = 1, "Twirl of x under the n-fold action.");
  m.def("weyl_twirl", [](const ComplexMatrix& a, Index mm, Index d) {
    return weyl_twirl(HermitianOperator(a), mm, d).matrix();
  });

  m.def("p_min", [](const ComplexMatrix& a, const ComplexMatrix& b, double x, int n) { return p_min(dm(a), dm(b), x, n); },
        py::arg("rho0n"), py::arg("rho1n"), py::arg("a"), py::arg("n"));
  m.def("p_err_symmetric", [](const ComplexMatrix& a, const ComplexMatrix& b) { return p_err_symmetric(dm(a), dm(b)); });
  m.def("beta_eps", [](const ComplexMatrix& a, const ComplexMatrix& b, double eps) { return beta_eps(dm(a), dm(b), eps); },
        py::arg("rho0n"), py::arg("rho1n"), py::arg("eps"));

  m.def("closed_form_psi", [](const std::string& kind, const Params& p, double s) {
    return closed_form_psi(scenario_kind_from_string(kind), p, s);
  });
  m.def("closed_form_psi_unrestricted", [](const std::string& kind, const Params& p, double s) {
    return closed_form_psi_unrestricted(scenario_kind_from_string(kind), p, s);
  });
  m.def("solve_alpha_star", &solve_alpha_star);
  m.def("solve_s_star", &solve_s_star, py::arg("lam"), py::arg("mu"));
  m.def("limit_formula_a4", &limit_formula_a4);
  m.def("finite_a4", &finite_a4);
  m.def("limit_formula_a5", &limit_formula_a5);
  m.def("finite_a5", &finite_a5);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("name", &Scenario::name)
      .def_readonly("n_max", &Scenario::n_max)
      .def_readonly("params", &Scenario::params)
      .def_property_readonly("kind", [](const Scenario& s) { return to_string(s.kind); })
      .def_property_readonly("dim", [](const Scenario& s) { return s.rho0.dim(); })
      .def_property_readonly("rho0", [](const Scenario& s) { return s.rho0.matrix(); })
      .def_property_readonly("rho1", [](const Scenario& s) { return s.rho1.matrix(); })
      .def("twirled_pair",
           [](const Scenario& s, int n) {
             auto [a, b] = twirled_pair(s, n);
             return py::make_tuple(a.matrix(), b.matrix());
           })
      .def("serialize", &serialize_scenario)
      .def("violations", [](const Scenario& s) { return count_violations(verify_scenario(s)); });
  m.def("parse_scenario", &parse_scenario);
  m.def("load_scenario", &load_scenario);
  m.def("torus_pure_vs_mixed", &torus_pure_vs_mixed_scenario, py::arg("alpha"), py::arg("n_max") = 6);
  m.def("z2_commuting", &z2_commuting_scenario, py::arg("lam"), py::arg("mu"), py::arg("n_max") = 6);
  m.def("torus_two_pure", &torus_two_pure_scenario, py::arg("lam"), py::arg("mu"), py::arg("n_max") = 6);
  m.def("z2_pure_vs_mixed", &z2_pure_vs_mixed_scenario, py::arg("alpha"), py::arg("n_max") = 6);

  m.def(
      "run",
      [](const std::string& command, const std::string& scenario, int n_max, const std::string& s_grid,
         const std::string& fmt, const std::string& name) {
        RunConfig cfg;
        cfg.command = command;
        cfg.scenario_path = scenario;
        cfg.n_max = n_max;
        cfg.s_grid = s_grid;
        cfg.format = fmt;
        cfg.name = name;
        std::ostringstream out, err;
        int code = run(cfg, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("command"), py::arg("scenario") = "", py::arg("n_max") = 0, py::arg("s_grid") = "",
      py::arg("format") = "csv", py::arg("name") = "all",
      "Runs one CLI command in-process; returns (exit_code, stdout, stderr).");
}
