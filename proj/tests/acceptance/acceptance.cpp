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

// Acceptance criteria AC1..AC8. One line per criterion:
//   ACk PASS|FAIL  <measured> (limit <tolerance>)  <seconds>s
// Tolerances are fixed below and are not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symtest/asymptotics.hpp"
#include "symtest/divergences.hpp"
#include "symtest/groups.hpp"
#include "symtest/hypothesis.hpp"
#include "symtest/numeric.hpp"
#include "symtest/verify.hpp"

using namespace symtest;
using json = nlohmann::ordered_json;

namespace {

const double kLog2 = std::log(2.0);

json fixture(const std::string& id) {
  std::ifstream is(std::string(SYMTEST_FIXTURE_DIR) + "/" + id + ".json");
  if (!is) throw std::runtime_error("missing fixture " + id);
  return json::parse(is);
}

ComplexMatrix to_matrix(const json& j) {
  ComplexMatrix m(j.size(), j.size());
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = 0; c < j[r].size(); ++c) m(r, c) = {j[r][c][0].get<double>(), j[r][c][1].get<double>()};
  return m;
}

struct Result {
  bool pass = true;
  std::ostringstream detail;
  void fail_if(bool bad, const std::string& why) {
    if (bad) {
      if (!pass) detail << "; ";
      pass = false;
      detail << why;
    }
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Chernoff quantities at alpha*.
Result ac1() {
  Result r;
  const double a = solve_alpha_star();
  Params p{{"alpha", a}};
  auto f = [&](double s) { return closed_form_psi(ScenarioKind::TorusPureVsMixed, p, s); };
  const double d = central_derivative(f, 0.5, 1e-4);
  const double c = chernoff_distance(closed_form_curve(ScenarioKind::TorusPureVsMixed, p, default_s_grid()));
  r.fail_if(std::abs(a - 0.11) > 0.01, "alpha* out of range");
  r.fail_if(std::abs(d) > 1e-8, "psi'(1/2) not zero");
  r.fail_if(std::abs(c - 0.5 * kLog2) > 1e-8, "C_M differs from log2/2");
  r.detail << (r.pass ? "" : "; ") << "alpha*=" << a << " |psi'(1/2)|=" << sci(std::abs(d))
           << " (<=1e-8) |C_M-log2/2|=" << sci(std::abs(c - 0.5 * kLog2)) << " (<=1e-8)";
  return r;
}

Result ac2() {
  Result r;
  auto fx = fixture("asymptotics_ex62_block_psi");
  std::map<std::tuple<double, int, double>, double> want;
  for (const auto& row : fx["value"]) want[{row[0].get<double>(), row[1].get<int>(), row[2].get<double>()}] = row[3].get<double>();
  double worst = 0.0, worst_env = -1.0;
  for (double alpha : {0.3, 0.5}) {
    Scenario sc = torus_pure_vs_mixed_scenario(alpha, 8);
    for (int n = 1; n <= 8; ++n) {
      auto [r0, r1] = twirled_pair(sc, n);
      PsiEvaluator ev(r0, r1);
      for (double s : {0.25, 0.5, 0.75, 1.25}) worst = std::max(worst, std::abs(ev(s) - want.at({alpha, n, s})));
      // |psi_n(1/2)/n + log2/2| against log(n+1)/n
      double excess = std::abs(ev(0.5) / n + 0.5 * kLog2) - std::log(n + 1.0) / n;
      worst_env = std::max(worst_env, excess);
    }
  }
  r.fail_if(worst > 1e-8, "dense vs block oracle");
  r.fail_if(worst_env > 1e-12, "outside the log(n+1)/n envelope");
  r.detail << (r.pass ? "" : "; ") << "max|dense-oracle|=" << sci(worst)
           << " (<=1e-8) worst envelope excess=" << sci(worst_env) << " (<=0)";
  return r;
}

Result ac3() {
  Result r;
  auto fx = fixture("asymptotics_ex65_limit");
  Scenario sc = torus_two_pure_scenario(0.3, 0.6, 8);
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    auto [r0, r1] = twirled_pair(sc, n);
    PsiEvaluator ev(r0, r1);
    for (const auto& row : fx["value"]) worst = std::max(worst, std::abs(ev(row[0].get<double>()) / n - row[1].get<double>()));
  }
  r.fail_if(worst > 1e-9, "finite-n differs from the limit");
  r.detail << (r.pass ? "" : "; ") << "max|psi_n/n - limit|=" << sci(worst) << " (<=1e-9)";
  return r;
}

Result ac4() {
  Result r;
  Scenario sc = z2_commuting_scenario(0.2, 0.7, 8);
  const auto grid = linspace(0.0, 1.0, 21);
  double min_gap = kInf, worst_env = -1.0;
  for (int n = 1; n <= 8; ++n) {
    auto [r0, r1] = twirled_pair(sc, n);
    PsiEvaluator ev(r0, r1);
    if (n >= 2) {
      double gap = ev(0.5) / n - closed_form_psi_unrestricted(ScenarioKind::Z2Commuting, sc.params, 0.5);
      min_gap = std::min(min_gap, gap);
    }
    for (double s : grid) {
      double d = ev(s) / n - closed_form_psi(ScenarioKind::Z2Commuting, sc.params, s);
      worst_env = std::max({worst_env, -d, d - kLog2 / n});
    }
  }
  r.fail_if(!(min_gap > 1e-6), "restricted curve does not separate from psi°");
  r.fail_if(worst_env > 1e-12, "max formula outside the log2/n envelope");

  Scenario ext = z2_commuting_scenario(0.0, 1.0, 8);
  double diff = 0.0, perr = 0.0;
  for (int n = 1; n <= 8; ++n) {
    auto [e0, e1] = twirled_pair(ext, n);
    diff = std::max(diff, max_abs_diff(e0.matrix(), e1.matrix()));
    perr = std::max(perr, std::abs(p_err_symmetric(e0, e1) - 0.5));
  }
  r.fail_if(diff != 0.0, "extremal pair twirls differ");
  r.fail_if(perr > 1e-12, "extremal P_err differs from 1/2");
  r.detail << (r.pass ? "" : "; ") << "min gap at s=1/2=" << sci(min_gap) << " (>1e-6) envelope excess="
           << sci(worst_env) << " (<=1e-12) extremal max|rho0n-rho1n|=" << diff << " |P_err-1/2|=" << sci(perr);
  return r;
}

Result ac5() {
  Result r;
  auto reps = verify_reference_suite(6);
  std::size_t checks = 0;
  for (const auto& rep : reps) checks += rep.checks();
  std::size_t v = count_violations(reps);
  r.fail_if(v != 0, std::to_string(v) + " violations");
  for (const auto& rep : reps)
    if (!rep.ok()) r.detail << " [" << rep.summary() << "]";
  r.detail << (r.pass ? "" : "; ") << checks << " checks, " << v << " violations";
  return r;
}

Result ac6() {
  Result r;
  auto fx = fixture("tests_ex62_beta_eps");
  const double sm = -(std::log(0.3) + std::log(0.7)) / 2;
  Scenario sc = torus_pure_vs_mixed_scenario(0.3, 10);
  std::map<std::pair<int, double>, double> oracle;
  for (const auto& row : fx["value"]) oracle[{row["n"].get<int>(), row["eps"].get<double>()}] = row["value"].get<double>();
  std::map<double, double> prev_gap;
  double worst_oracle = 0.0, worst_bound = -kInf, gap10 = 0.0;
  bool monotone = true;
  PsiCurve limit = closed_form_curve(ScenarioKind::TorusPureVsMixed, sc.params, default_s_grid());
  const auto a_grid = strong_converse_a_grid(limit);
  for (int n : {4, 6, 8, 10}) {
    auto [r0, r1] = twirled_pair(sc, n);
    BetaEpsSolver solver(r0, r1);
    PsiCurve cn = psi_curve(r0, r1, linspace(1.0, 1.5, 51), n, "psi_n");
    for (double eps : {0.1, 0.3}) {
      double b = solver.solve(eps).beta1;
      worst_oracle = std::max(worst_oracle, std::abs(b - oracle.at({n, eps})));
      double gap = std::abs(-std::log(b) / n - sm);
      if (prev_gap.count(eps) && gap > prev_gap[eps]) monotone = false;
      prev_gap[eps] = gap;
      if (n == 10) gap10 = std::max(gap10, gap);
      for (double a : a_grid) worst_bound = std::max(worst_bound, strong_converse_bound(cn, eps, a, n) - b);
    }
  }
  r.fail_if(worst_oracle > 1e-12, "beta_eps differs from the classical oracle");
  r.fail_if(gap10 > 0.25, "n=10 rate not within 0.25 of S_M");
  r.fail_if(!monotone, "rate gap not monotone in n");
  r.fail_if(worst_bound > 1e-12, "strong-converse bound exceeds beta_eps");
  r.detail << (r.pass ? "" : "; ") << "max n=10 |rate-S_M|=" << sci(gap10) << " (<=0.25) monotone="
           << (monotone ? "yes" : "no") << " max(bound-beta)=" << sci(worst_bound) << " (<=0) |beta-oracle|="
           << sci(worst_oracle);
  return r;
}

Result ac7() {
  Result r;
  double lf = 0.0;
  for (double alpha : {0.3, 0.5}) {
    PsiCurve c = closed_form_curve(ScenarioKind::TorusPureVsMixed, {{"alpha", alpha}}, default_s_grid());
    for (double rr : {0.05, 0.2}) lf = std::max(lf, std::abs(hoeffding_via_lf(c, rr) - hoeffding_distance(c, rr)));
  }
  double weyl = 0.0;
  auto wf = fixture("groups_weyl_partial_trace");
  for (const auto& item : wf["value"]) {
    HermitianOperator a(to_matrix(item["a"]));
    weyl = std::max(weyl, max_abs_diff(weyl_twirl(a, item["m"].get<int>(), item["d"].get<int>()).matrix(),
                                       to_matrix(item["value"])));
  }
  double a4 = std::abs(finite_a4(0.3, 0.7, 0.5, 400) - limit_formula_a4(0.3, 0.7, 0.5));
  double a5 = std::max(std::abs(finite_a5(0.8, 0.2, 400) - limit_formula_a5(0.8, 0.2)),
                       std::abs(finite_a5(0.2, 0.8, 400) - limit_formula_a5(0.2, 0.8)));
  r.fail_if(lf > 1e-6, "Legendre-Fenchel identity");
  r.fail_if(wf["value"].size() != 20 || weyl > 1e-9, "Weyl twirl vs partial trace");
  r.fail_if(a4 > 0.02, "A4 finite sum");
  r.fail_if(a5 > 0.02, "A5 finite sum");
  r.detail << (r.pass ? "" : "; ") << "LF identity " << sci(lf) << " (<=1e-6) weyl " << sci(weyl)
           << " (<=1e-9) A4 " << sci(a4) << " A5 " << sci(a5) << " (<=0.02)";
  return r;
}

// Z2 subgroup on the pure-vs-mixed pair, compared against psi° literally.
Result ac8() {
  Result r;
  Scenario sc = z2_pure_vs_mixed_scenario(0.3, 6);
  const auto grid = default_s_grid();
  double worst = 0.0, identity = 0.0;
  for (int n = 1; n <= 6; ++n) {
    auto [r0, r1] = twirled_pair(sc, n);
    PsiEvaluator ev(r0, r1);
    for (double s : grid) {
      double d = ev(s) / n - closed_form_psi_unrestricted(ScenarioKind::Z2PureVsMixed, sc.params, s);
      worst = std::max(worst, std::abs(d));
      identity = std::max(identity, std::abs(d - (1 - s) * kLog2 / n));
    }
  }
  r.fail_if(worst > 1e-9, "psi_n/n differs from psi° at finite n");
  r.detail << (r.pass ? "" : "; ") << "max|psi_n/n - psi°|=" << sci(worst)
           << " (<=1e-9); the difference equals (1-s)log2/n to " << sci(identity)
           << ", so equality holds only in the limit";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symtest acceptance criteria"};
  std::string only;
  app.add_option("--criterion", only, "run a single criterion (AC1..AC8)");
  CLI11_PARSE(app, argc, argv);

  // Runtime limits in seconds; 0 means none stated.
  const std::vector<std::tuple<std::string, std::function<Result()>, double>> all{
      {"AC1", ac1, 1.0},  {"AC2", ac2, 30.0},  {"AC3", ac3, 30.0}, {"AC4", ac4, 0.0},
      {"AC5", ac5, 300.0}, {"AC6", ac6, 0.0}, {"AC7", ac7, 10.0}, {"AC8", ac8, 0.0}};
  bool any = false, ok = true;
  for (const auto& [name, fn, limit] : all) {
    if (!only.empty() && only != name) continue;
    any = true;
    auto t0 = std::chrono::steady_clock::now();
    Result res;
    try {
      res = fn();
    } catch (const std::exception& e) {
      res.fail_if(true, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs > limit) res.fail_if(true, "runtime " + sci(secs) + "s over " + sci(limit) + "s");
    std::printf("%s %s  %s  %.2fs\n", name.c_str(), res.pass ? "PASS" : "FAIL", res.detail.str().c_str(), secs);
    ok = ok && res.pass;
  }
  if (!any) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return ok ? 0 : 1;
}
