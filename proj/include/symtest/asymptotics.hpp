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

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symtest/divergences.hpp"
#include "symtest/groups.hpp"
#include "symtest/linalg.hpp"

namespace symtest {

enum class ScenarioKind {
  None,              // user scenario, no closed form
  Z2Commuting,       // sigma_lambda vs sigma_mu under Z2 (params lambda, mu)
  TorusPureVsMixed,  // |+><+| vs diag(alpha, 1-alpha) under the torus (alpha)
  TorusTwoPure,      // two real pure qubit states under the torus (lambda, mu)
  Z2PureVsMixed,     // the TorusPureVsMixed pair under the Z2 subgroup (alpha)
};

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& name);

using Params = std::map<std::string, double>;

struct Scenario {
  std::string name;
  DensityOperator rho0;
  DensityOperator rho1;
  GroupAction action;
  int n_max = 1;
  Params params;
  ScenarioKind kind = ScenarioKind::None;
  // Constructor strings ("diag 0.3") when built by name; kept for serialization.
  std::string rho0_spec;
  std::string rho1_spec;
};

// [[1/2, l - 1/2], [l - 1/2, 1/2]] = l |+><+| + (1-l) |-><-|
ComplexMatrix bernoulli_conjugated(double lambda);
// [[l, sqrt(l(1-l))], [sqrt(l(1-l)), 1-l]]
ComplexMatrix pure_qubit(double lambda);
ComplexMatrix diag_state(double alpha);
GroupAction z2_action();
GroupAction qubit_torus();

Scenario z2_commuting_scenario(double lambda, double mu, int n_max);
Scenario torus_pure_vs_mixed_scenario(double alpha, int n_max);
Scenario torus_two_pure_scenario(double lambda, double mu, int n_max);
Scenario z2_pure_vs_mixed_scenario(double alpha, int n_max);

void validate_scenario(const Scenario& sc);

// Twirled n-fold pair (rho0n, rho1n).
std::pair<DensityOperator, DensityOperator> twirled_pair(const Scenario& sc, int n);

double closed_form_psi(ScenarioKind kind, const Params& params, double s);
// psi° of the single-copy pair.
double closed_form_psi_unrestricted(ScenarioKind kind, const Params& params, double s);
// Analytic psi'(s) for TorusPureVsMixed.
double closed_form_psi_derivative(ScenarioKind kind, const Params& params, double s);
PsiCurve closed_form_curve(ScenarioKind kind, const Params& params,
                           const std::vector<double>& grid);

struct ConvergenceRow {
  int n;
  double s;
  double value;        // psi_n(s) / n
  double closed_form;  // or the best-n reference when there is none
  double gap;
  bool monotone;       // |gap_n| <= |gap_{n-1}|
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::string reference;  // "closed-form" or "best-n (n=N)"
};

ConvergenceTable convergence_table(const Scenario& sc, const std::vector<double>& s_grid);

// Root s* <= 0 of ((1-l) m / (l (1-m)))^s = m / (1-m), for 0 < l < m <= 1/2.
double solve_s_star(double lambda, double mu);
// Root on (0, 1/2) of -2 (a log a + (1-a) log(1-a)) = log 2.
double solve_alpha_star();

double limit_formula_a4(double a, double b, double s);
// (sum_i C(n,i)^s a^i b^(n-i))^(1/n)
double finite_a4(double a, double b, double s, long n);
double limit_formula_a5(double a, double b);
// (sum_{i <= n/2} C(n,i) a^i b^(n-i))^(1/n)
double finite_a5(double a, double b, long n);

struct MeanQuantities {
  DivergenceReport mean;          // restricted quantities; relative_entropy is S_M
  DivergenceReport unrestricted;  // single-copy quantities
  std::string source;             // "closed-form" or "best-n (n=N)"
  std::string error_bar;          // direction of the finite-n bias
};

MeanQuantities mean_quantities(const Scenario& sc, const std::vector<double>& r_grid);

}  // namespace symtest
