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

#include "symtest/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "symtest/asymptotics.hpp"
#include "symtest/divergences.hpp"
#include "symtest/error.hpp"
#include "symtest/examples.hpp"
#include "symtest/hypothesis.hpp"
#include "symtest/numeric.hpp"
#include "symtest/scenario_io.hpp"
#include "symtest/table.hpp"
#include "symtest/verify.hpp"

namespace symtest {

namespace {

std::vector<double> grid_or(const std::string& spec, std::vector<double> fallback) {
  return spec.empty() ? fallback : parse_grid(spec);
}

Scenario need_scenario(const RunConfig& c) {
  if (c.scenario_path.empty()) throw ParseError("command '" + c.command + "' needs --scenario");
  Scenario sc = load_scenario(c.scenario_path);
  if (c.n_max > 0) sc.n_max = c.n_max;
  validate_scenario(sc);
  return sc;
}

// Limit curve: closed form when the scenario has one, else psi_{n_max}/n_max.
PsiCurve limit_curve(const Scenario& sc, const std::vector<double>& grid) {
  if (sc.kind != ScenarioKind::None) return closed_form_curve(sc.kind, sc.params, grid);
  auto [a, b] = twirled_pair(sc, sc.n_max);
  return psi_curve(a, b, grid, sc.n_max).scaled(1.0 / sc.n_max, sc.n_max, "psi_n/n");
}

std::vector<double> with_unit_interval(std::vector<double> grid) {
  // Distances need [0, 1] covered.
  grid.push_back(0.0);
  grid.push_back(1.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

Table cmd_psi(const Scenario& sc, const std::vector<double>& grid) {
  Table t{{"s", "value", "n", "label"}, {}};
  for (int n = 1; n <= sc.n_max; ++n) {
    auto [a, b] = twirled_pair(sc, n);
    PsiCurve c = psi_curve(a, b, grid, n, "psi_n");
    for (std::size_t k = 0; k < c.s_grid.size(); ++k) {
      t.add({c.s_grid[k], c.values[k], static_cast<long long>(n), c.label});
    }
  }
  if (sc.kind != ScenarioKind::None) {
    PsiCurve c = closed_form_curve(sc.kind, sc.params, grid);
    for (std::size_t k = 0; k < c.s_grid.size(); ++k) {
      t.add({c.s_grid[k], c.values[k], 0LL, std::string("psi")});
    }
  }
  return t;
}

Table cmd_chernoff(const Scenario& sc, const std::vector<double>& grid) {
  Table t{{"n", "chernoff", "chernoff_over_n", "s_min"}, {}};
  for (int n = 1; n <= sc.n_max; ++n) {
    auto [a, b] = twirled_pair(sc, n);
    PsiCurve c = psi_curve(a, b, grid, n);
    double v = chernoff_distance(c);
    t.add({static_cast<long long>(n), v, v / n, chernoff_argmin(c)});
  }
  PsiCurve lim = limit_curve(sc, grid);
  double v = chernoff_distance(lim);
  t.add({0LL, v, v, chernoff_argmin(lim)});
  return t;
}

Table cmd_hoeffding(const Scenario& sc, const std::vector<double>& grid,
                    const std::vector<double>& r_grid) {
  Table t{{"n", "r", "hoeffding"}, {}};
  for (int n = 1; n <= sc.n_max; ++n) {
    auto [a, b] = twirled_pair(sc, n);
    PsiCurve c = psi_curve(a, b, grid, n).scaled(1.0 / n, n, "psi_n/n");
    for (double r : r_grid) t.add({static_cast<long long>(n), r, hoeffding_distance(c, r)});
  }
  PsiCurve lim = limit_curve(sc, grid);
  for (double r : r_grid) t.add({0LL, r, hoeffding_distance(lim, r)});
  return t;
}

Table cmd_stein(const Scenario& sc, const std::vector<double>& eps) {
  Table t{{"n", "eps", "relative_entropy_over_n", "minus_log_beta_over_n"}, {}};
  for (int n = 1; n <= sc.n_max; ++n) {
    auto [a, b] = twirled_pair(sc, n);
    double s = relative_entropy(a, b) / n;
    BetaEpsSolver solver(a, b);
    for (double e : eps) {
      double beta = solver.solve(e).beta1;
      t.add({static_cast<long long>(n), e, s, beta > 0 ? -std::log(beta) / n : kInf});
    }
  }
  MeanQuantities mq = mean_quantities(sc, {});
  t.add({0LL, 0.0, mq.mean.relative_entropy, mq.mean.relative_entropy});
  return t;
}

Table error_table() { return {{"n", "a_or_eps", "beta0", "beta1", "bound_lo", "bound_hi"}, {}}; }

Table cmd_pmin(const Scenario& sc, const std::vector<double>& a_grid) {
  Table t = error_table();
  for (int n = 1; n <= sc.n_max; ++n) {
    auto [r0, r1] = twirled_pair(sc, n);
    for (double a : a_grid) {
      ErrorPair e = error_pair(np_test(r0, r1, a, n), r0, r1);
      AudenaertResult res = audenaert_sandwich(r0, r1, a, n);
      t.add({static_cast<long long>(n), a, e.beta0, e.beta1, res.lower, res.upper});
    }
  }
  return t;
}

Table cmd_beta_eps(const Scenario& sc, const std::vector<double>& eps) {
  Table t = error_table();
  for (int n = 1; n <= sc.n_max; ++n) {
    auto [r0, r1] = twirled_pair(sc, n);
    BetaEpsSolver solver(r0, r1);
    PsiCurve pn = psi_curve(r0, r1, linspace(0.0, 1.5, 151), n);
    std::vector<double> agrid = strong_converse_a_grid(pn.scaled(1.0 / n, n, "psi_n/n"));
    for (double e : eps) {
      BetaEpsResult res = solver.solve(e);
      double lo = kNegInf;
      for (double a : agrid) lo = std::max(lo, strong_converse_bound(pn, e, a, n));
      t.add({static_cast<long long>(n), e, res.beta0, res.beta1, lo, res.deterministic});
    }
  }
  return t;
}

void emit(const Table& t, const RunConfig& c, std::ostream& out) {
  if (c.out_path.empty()) {
    write_table(t, c.format, out);
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw ParseError("cannot write '" + c.out_path + "'");
  write_table(t, c.format, f);
}

int report_checks(const std::vector<CheckReport>& reports, std::ostream& err) {
  std::size_t checks = 0;
  for (const auto& r : reports) {
    checks += r.checks();
    err << r.summary() << '\n';
  }
  std::size_t bad = count_violations(reports);
  err << (bad ? "FAIL" : "PASS") << ": " << checks << " checks, " << bad << " violations\n";
  return bad ? kExitViolation : kExitOk;
}

int cmd_examples(const RunConfig& c, std::ostream& out, std::ostream& err) {
  auto results = run_examples(c.name, c.n_max > 0 ? c.n_max : 6);
  std::ofstream file;
  std::ostream* os = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) throw ParseError("cannot write '" + c.out_path + "'");
    os = &file;
  }
  std::vector<CheckReport> reports;
  for (const auto& r : results) {
    out << "== " << r.name << '\n';
    for (const auto& line : r.lines) out << line << '\n';
    for (const auto& [title, table] : r.tables) {
      *os << "# " << title << '\n';
      write_table(table, c.format, *os);
    }
    reports.push_back(r.report);
  }
  return report_checks(reports, err);
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.format != "csv" && c.format != "json") {
    throw ParseError("unknown format '" + c.format + "' (expected csv or json)");
  }
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), c.command) == names.end()) {
    throw ParseError("unknown command '" + c.command + "'");
  }
  for (double e : c.eps) {
    if (!(e > 0.0 && e < 1.0)) throw ParseError("--eps values must lie in (0,1)");
  }
  if (c.command == "examples") return cmd_examples(c, out, err);
  if (c.command == "verify") {
    if (c.scenario_path.empty()) return report_checks(verify_reference_suite(c.n_max > 0 ? c.n_max : 6), err);
    return report_checks(verify_scenario(need_scenario(c)), err);
  }

  Scenario sc = need_scenario(c);
  const std::vector<double> eps = c.eps.empty() ? std::vector<double>{0.1, 0.3} : c.eps;
  const auto s_grid = grid_or(c.s_grid, default_s_grid());
  const auto r_grid = grid_or(c.r_grid, linspace(0.0, 0.5, 6));
  const auto a_grid = grid_or(c.a_grid, linspace(-0.5, 0.5, 11));
  Table t;
  if (c.command == "psi") t = cmd_psi(sc, s_grid);
  else if (c.command == "chernoff") t = cmd_chernoff(sc, with_unit_interval(s_grid));
  else if (c.command == "hoeffding") t = cmd_hoeffding(sc, with_unit_interval(s_grid), r_grid);
  else if (c.command == "stein") t = cmd_stein(sc, eps);
  else if (c.command == "pmin") t = cmd_pmin(sc, a_grid);
  else if (c.command == "beta-eps") t = cmd_beta_eps(sc, eps);
  else t = convergence_csv(convergence_table(sc, s_grid));
  emit(t, c, out);
  return kExitOk;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"psi",  "chernoff", "hoeffding",   "stein",   "pmin",
                                              "beta-eps", "convergence", "examples", "verify"};
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kExitDimension;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitDimension;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace symtest
