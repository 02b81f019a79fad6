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

#include "symtest/examples.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "symtest/asymptotics.hpp"
#include "symtest/divergences.hpp"
#include "symtest/error.hpp"
#include "symtest/hypothesis.hpp"
#include "symtest/numeric.hpp"

namespace symtest {

namespace {

const double kLog2 = std::numbers::ln2;

std::string num(double x) { return format_double(x); }

ExampleResult start(const std::string& name) {
  ExampleResult r;
  r.name = name;
  r.report = CheckReport(name);
  return r;
}

ExampleResult ex61(int n_max) {
  ExampleResult r = start("ex61");
  Scenario sc = z2_commuting_scenario(0.2, 0.7, n_max);
  // Normalized pair (0.2, 0.3) has the same twirled states.
  const double s_star = solve_s_star(0.2, 0.3);
  auto f = [&](double s) { return closed_form_psi(sc.kind, sc.params, s); };
  double dl = left_derivative(f, s_star), dr = right_derivative(f, s_star);
  r.lines.push_back("Z2 acting on sigma_0.2 vs sigma_0.7 (opposite sides of 1/2)");
  r.lines.push_back("s* = " + num(s_star) + "  psi'(s*-) = " + num(dl) + "  psi'(s*+) = " + num(dr));
  r.report.expect_near(dl, dr, 1e-6, "psi differentiable at s*");

  const auto grid = default_s_grid();
  double c = chernoff_distance(psi_curve(sc.rho0, sc.rho1, grid));
  double cm = chernoff_distance(closed_form_curve(sc.kind, sc.params, grid));
  ComplexMatrix u = sc.action.unitaries()[1];
  DensityOperator flipped(u * sc.rho1.matrix() * u.adjoint());
  double c_flip = chernoff_distance(psi_curve(sc.rho0, flipped, grid));
  r.lines.push_back("C = " + num(c) + "  C(rho0, rho1 o Ad u) = " + num(c_flip) + "  C_M = " + num(cm));
  r.report.expect_near(cm, std::min(c, c_flip), 1e-8, "C_M = min of the unrestricted distances");

  ConvergenceTable t = convergence_table(sc, {s_star, 0.0, 0.25, 0.5, 0.75, 1.0});
  for (const auto& row : t.rows) {
    if (row.s != 0.5) continue;
    r.report.expect_ge(row.gap, 0.0, 1e-8, "gap >= 0 at s=0.5, n=" + std::to_string(row.n));
    r.report.expect_le(row.gap, kLog2 / row.n, 1e-8, "gap <= log2/n at s=0.5, n=" + std::to_string(row.n));
  }
  r.tables.emplace_back("ex61 convergence", convergence_csv(t));

  // Extremal pair: both hypotheses twirl to the same state.
  Scenario ext = z2_commuting_scenario(0.0, 1.0, n_max);
  Table et{{"n", "max_abs_diff", "p_min", "p_err_symmetric"}, {}};
  for (int n = 1; n <= n_max; ++n) {
    auto [a, b] = twirled_pair(ext, n);
    double diff = max_abs_diff(a.matrix(), b.matrix());
    double pe = p_err_symmetric(a, b);
    et.add({static_cast<long long>(n), diff, p_min(a, b, 0.0, n), pe});
    r.report.expect(diff == 0.0, "extremal rho0n = rho1n exactly, n=" + std::to_string(n));
    r.report.expect_near(pe, 0.5, 1e-12, "extremal P_err = 1/2, n=" + std::to_string(n));
  }
  r.lines.push_back("extremal (0, 1): psi = 0 while psi° = -inf; rho0n = rho1n for every n");
  r.tables.emplace_back("ex61 extremal", et);
  return r;
}

ExampleResult ex62(int n_max) {
  ExampleResult r = start("ex62");
  const double alpha = 0.3;
  Scenario sc = torus_pure_vs_mixed_scenario(alpha, n_max);
  const auto grid = default_s_grid();
  PsiCurve cf = closed_form_curve(sc.kind, sc.params, grid);
  double c = chernoff_distance(psi_curve(sc.rho0, sc.rho1, grid));
  double cm = chernoff_distance(cf);
  double sm = left_derivative([&](double s) { return cf.at(s); }, 1.0);
  double sm_exact = -(std::log(alpha) + std::log1p(-alpha)) / 2.0;
  r.lines.push_back("torus acting on |+><+| vs diag(0.3, 0.7)");
  r.lines.push_back("C = " + num(c) + " (log 2 = " + num(kLog2) + ")  C_M = " + num(cm));
  r.lines.push_back("S_M = psi'(1-) = " + num(sm) + "  exact " + num(sm_exact) +
                    "  S = " + num(relative_entropy(sc.rho0, sc.rho1)));
  r.report.expect_near(c, kLog2, 1e-8, "unrestricted Chernoff = log 2");
  r.report.expect_near(sm, sm_exact, 1e-6, "S_M = -(log a + log(1-a))/2");

  r.tables.emplace_back("ex62 convergence",
                        convergence_csv(convergence_table(sc, {0.25, 0.5, 0.75, 1.25})));

  Table bt{{"n", "a_or_eps", "beta0", "beta1", "bound_lo", "bound_hi"}, {}};
  for (int n : {4, 6, 8, 10}) {
    auto [a, b] = twirled_pair(sc, n);
    BetaEpsSolver solver(a, b);
    PsiCurve pn = psi_curve(a, b, linspace(0.0, 1.5, 151), n);
    PsiCurve normalized = pn.scaled(1.0 / n, n, "psi_n/n");
    std::vector<double> agrid = strong_converse_a_grid(normalized);
    for (double eps : {0.1, 0.3}) {
      BetaEpsResult res = solver.solve(eps);
      double lo = kNegInf;
      for (double x : agrid) lo = std::max(lo, strong_converse_bound(pn, eps, x, n));
      bt.add({static_cast<long long>(n), eps, res.beta0, res.beta1, lo, res.deterministic});
      r.report.expect_le(lo, res.beta1, 1e-12,
                         "strong-converse bound <= beta_eps, n=" + std::to_string(n) + " eps=" + num(eps));
    }
  }
  r.tables.emplace_back("ex62 beta_eps", bt);
  return r;
}

ExampleResult remark63(int n_max) {
  ExampleResult r = start("remark63");
  Scenario sc = z2_pure_vs_mixed_scenario(0.3, n_max);
  r.lines.push_back("Z2 subgroup acting on the ex62 pair; rho1 is invariant");
  r.lines.push_back("experiment only: reports psi_n/n - psi° next to (1-s) log 2 / n");
  Table t{{"n", "s", "value", "psi_unrestricted", "gap", "predicted_gap"}, {}};
  double worst = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    auto [a, b] = twirled_pair(sc, n);
    PsiEvaluator ev(a, b);
    for (double s : {-0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0}) {
      double v = ev(s) / n;
      double ref = closed_form_psi_unrestricted(sc.kind, sc.params, s);
      double pred = (1.0 - s) * kLog2 / n;
      worst = std::max(worst, std::abs(v - ref - pred));
      t.add({static_cast<long long>(n), s, v, ref, v - ref, pred});
    }
  }
  r.lines.push_back("max |gap - (1-s) log 2 / n| = " + num(worst));
  r.tables.emplace_back("remark63 gaps", t);
  return r;
}

ExampleResult remark64() {
  ExampleResult r = start("remark64");
  const double a = solve_alpha_star();
  Params p{{"alpha", a}};
  auto f = [&](double s) { return closed_form_psi(ScenarioKind::TorusPureVsMixed, p, s); };
  double d_exact = closed_form_psi_derivative(ScenarioKind::TorusPureVsMixed, p, 0.5);
  double d_fd = central_derivative(f, 0.5);
  double cm = chernoff_distance(closed_form_curve(ScenarioKind::TorusPureVsMixed, p, default_s_grid()));
  r.lines.push_back("alpha* = " + num(a));
  r.lines.push_back("psi'(1/2) = " + num(d_exact) + " (finite difference " + num(d_fd) + ")");
  r.lines.push_back("C_M = " + num(cm) + "  (1/2) log 2 = " + num(0.5 * kLog2));
  r.report.expect(a >= 0.10 && a <= 0.12, "alpha* in [0.10, 0.12]");
  r.report.expect_near(d_exact, 0.0, 1e-8, "psi'(1/2) = 0 at alpha*");
  r.report.expect_near(cm, 0.5 * kLog2, 1e-8, "C_M = (1/2) log 2 at alpha*");
  Table t{{"alpha_star", "psi_prime_half", "C_M", "half_log2", "C"}, {}};
  t.add({a, d_exact, cm, 0.5 * kLog2, kLog2});
  r.tables.emplace_back("remark64", t);
  return r;
}

ExampleResult ex65(int n_max) {
  ExampleResult r = start("ex65");
  Scenario sc = torus_two_pure_scenario(0.3, 0.6, n_max);
  const double l = 0.3, m = 0.6;
  ConvergenceTable t = convergence_table(sc, default_s_grid());
  double worst = 0.0;
  for (const auto& row : t.rows) worst = std::max(worst, std::abs(row.gap));
  r.report.expect_le(worst, 0.0, 1e-9, "psi_n/n equals the closed form at every n and s");
  MeanQuantities mq = mean_quantities(sc, {});
  double sm = l * std::log(l / m) + (1 - l) * std::log((1 - l) / (1 - m));
  r.lines.push_back("torus acting on two real pure states (0.3, 0.6)");
  r.lines.push_back("max |psi_n/n - psi| over n <= " + std::to_string(n_max) + " and the grid: " + num(worst));
  r.lines.push_back("S_M = " + num(mq.mean.relative_entropy) + "  exact " + num(sm) +
                    "  S = " + num(mq.unrestricted.relative_entropy));
  r.report.expect_near(mq.mean.relative_entropy, sm, 1e-6, "S_M = l log(l/m) + (1-l) log((1-l)/(1-m))");
  r.report.expect(std::isinf(mq.unrestricted.relative_entropy), "S(rho0||rho1) = +inf");
  r.tables.emplace_back("ex65 convergence", convergence_csv(convergence_table(sc, {-0.5, 0.0, 0.5, 1.0, 1.5, 2.0})));
  return r;
}

}  // namespace

Table convergence_csv(const ConvergenceTable& t) {
  Table out{{"n", "s", "value", "closed_form", "gap", "monotone_flag"}, {}};
  for (const auto& row : t.rows) {
    out.add({static_cast<long long>(row.n), row.s, row.value, row.closed_form, row.gap, row.monotone});
  }
  return out;
}

std::vector<ExampleResult> run_examples(const std::string& name, int n_max) {
  if (name == "ex61") return {ex61(n_max)};
  if (name == "ex62") return {ex62(n_max)};
  if (name == "remark63") return {remark63(n_max)};
  if (name == "remark64") return {remark64()};
  if (name == "ex65") return {ex65(n_max)};
  if (name == "all" || name.empty()) {
    return {ex61(n_max), ex62(n_max), remark63(n_max), remark64(), ex65(n_max)};
  }
  throw ParseError("unknown example '" + name + "' (expected ex61, ex62, remark63, remark64, ex65, all)");
}

}  // namespace symtest
