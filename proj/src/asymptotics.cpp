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

#include "symtest/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "symtest/error.hpp"
#include "symtest/numeric.hpp"

namespace symtest {

namespace {

const double kLog2 = std::numbers::ln2;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double param(const Params& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError(std::string("missing parameter '") + key + "'");
  return it->second;
}

double interior(const Params& p, const char* key) {
  double v = param(p, key);
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError(std::string("parameter ") + key + " = " + fmt(v) +
                      " must lie strictly inside (0,1)");
  }
  return v;
}

// k * log(x) with 0 * log(0) = 0.
double klog(double k, double logx) { return k == 0.0 ? 0.0 : k * logx; }

// psi for sigma_l vs sigma_m under Z2 with 0 < l < m <= 1/2.
double z2_normalized(double l, double m, double s) {
  double la = s * std::log(l) + (1 - s) * std::log(m);
  double lb = s * std::log1p(-l) + (1 - s) * std::log1p(-m);
  if (la <= lb) return log_add_exp(la, lb);
  return kLog2 + 0.5 * (la + lb);
}

}  // namespace

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::None: return "None";
    case ScenarioKind::Z2Commuting: return "Z2Commuting";
    case ScenarioKind::TorusPureVsMixed: return "TorusPureVsMixed";
    case ScenarioKind::TorusTwoPure: return "TorusTwoPure";
    case ScenarioKind::Z2PureVsMixed: return "Z2PureVsMixed";
  }
  return "None";
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
  for (auto k : {ScenarioKind::None, ScenarioKind::Z2Commuting, ScenarioKind::TorusPureVsMixed,
                 ScenarioKind::TorusTwoPure, ScenarioKind::Z2PureVsMixed}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown scenario kind '" + name + "'");
}

ComplexMatrix bernoulli_conjugated(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("bernoulli-conjugated: lambda outside [0,1]");
  ComplexMatrix m(2, 2);
  m << 0.5, lambda - 0.5, lambda - 0.5, 0.5;
  return m;
}

ComplexMatrix pure_qubit(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("pure-qubit: lambda outside [0,1]");
  double off = std::sqrt(lambda * (1.0 - lambda));
  ComplexMatrix m(2, 2);
  m << lambda, off, off, 1.0 - lambda;
  return m;
}

ComplexMatrix diag_state(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("diag: alpha outside [0,1]");
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = alpha;
  m(1, 1) = 1.0 - alpha;
  return m;
}

GroupAction z2_action() {
  ComplexMatrix u = ComplexMatrix::Identity(2, 2);
  u(1, 1) = -1.0;
  return GroupAction::finite({ComplexMatrix::Identity(2, 2), u});
}

GroupAction qubit_torus() { return GroupAction::torus({0, 1}); }

Scenario z2_commuting_scenario(double lambda, double mu, int n_max) {
  Scenario sc;
  sc.name = "z2-commuting";
  sc.rho0 = DensityOperator(bernoulli_conjugated(lambda));
  sc.rho1 = DensityOperator(bernoulli_conjugated(mu));
  sc.rho0_spec = "bernoulli-conjugated " + fmt(lambda);
  sc.rho1_spec = "bernoulli-conjugated " + fmt(mu);
  sc.action = z2_action();
  sc.n_max = n_max;
  sc.params = {{"lambda", lambda}, {"mu", mu}};
  sc.kind = ScenarioKind::Z2Commuting;
  return sc;
}

Scenario torus_pure_vs_mixed_scenario(double alpha, int n_max) {
  Scenario sc;
  sc.name = "torus-pure-vs-mixed";
  sc.rho0 = DensityOperator(pure_qubit(0.5));
  sc.rho1 = DensityOperator(diag_state(alpha));
  sc.rho0_spec = "pure-qubit 0.5";
  sc.rho1_spec = "diag " + fmt(alpha);
  sc.action = qubit_torus();
  sc.n_max = n_max;
  sc.params = {{"alpha", alpha}};
  sc.kind = ScenarioKind::TorusPureVsMixed;
  return sc;
}

Scenario torus_two_pure_scenario(double lambda, double mu, int n_max) {
  Scenario sc;
  sc.name = "torus-two-pure";
  sc.rho0 = DensityOperator(pure_qubit(lambda));
  sc.rho1 = DensityOperator(pure_qubit(mu));
  sc.rho0_spec = "pure-qubit " + fmt(lambda);
  sc.rho1_spec = "pure-qubit " + fmt(mu);
  sc.action = qubit_torus();
  sc.n_max = n_max;
  sc.params = {{"lambda", lambda}, {"mu", mu}};
  sc.kind = ScenarioKind::TorusTwoPure;
  return sc;
}

Scenario z2_pure_vs_mixed_scenario(double alpha, int n_max) {
  Scenario sc = torus_pure_vs_mixed_scenario(alpha, n_max);
  sc.name = "z2-pure-vs-mixed";
  sc.action = z2_action();
  sc.kind = ScenarioKind::Z2PureVsMixed;
  return sc;
}

void validate_scenario(const Scenario& sc) {
  if (sc.rho0.dim() != sc.rho1.dim()) {
    throw DimensionError("scenario '" + sc.name + "': rho0 is " + std::to_string(sc.rho0.dim()) +
                         "-dimensional but rho1 is " + std::to_string(sc.rho1.dim()));
  }
  if (sc.action.dim() != sc.rho0.dim()) {
    throw DimensionError("scenario '" + sc.name + "': group acts on dimension " +
                         std::to_string(sc.action.dim()) + ", states have " +
                         std::to_string(sc.rho0.dim()));
  }
  if (sc.n_max < 1) throw DomainError("scenario '" + sc.name + "': n_max must be positive");
  check_dim(std::pow(static_cast<double>(sc.rho0.dim()), sc.n_max), "scenario n_max");
}

std::pair<DensityOperator, DensityOperator> twirled_pair(const Scenario& sc, int n) {
  return {twirled_power(sc.rho0, sc.action, n), twirled_power(sc.rho1, sc.action, n)};
}

double closed_form_psi(ScenarioKind kind, const Params& p, double s) {
  switch (kind) {
    case ScenarioKind::Z2Commuting: {
      double lam = interior(p, "lambda"), mu = interior(p, "mu");
      // The twirled pair only depends on min(x, 1-x) of each parameter.
      double l = std::min(lam, 1.0 - lam), m = std::min(mu, 1.0 - mu);
      if (l == m) return 0.0;
      if (l < m) return z2_normalized(l, m, s);
      return z2_normalized(m, l, 1.0 - s);
    }
    case ScenarioKind::TorusPureVsMixed: {
      double a = interior(p, "alpha");
      if (s > 0.0) {
        double e = (1.0 - s) / s;
        return s * log_add_exp(e * std::log(a), e * std::log1p(-a)) - s * kLog2;
      }
      return (1.0 - s) * std::log(std::max(a, 1.0 - a)) - s * kLog2;
    }
    case ScenarioKind::TorusTwoPure: {
      double lam = interior(p, "lambda"), mu = interior(p, "mu");
      return log_add_exp(s * std::log(lam) + (1 - s) * std::log(mu),
                         s * std::log1p(-lam) + (1 - s) * std::log1p(-mu));
    }
    case ScenarioKind::Z2PureVsMixed:
      return closed_form_psi_unrestricted(kind, p, s);
    case ScenarioKind::None:
      break;
  }
  throw DomainError("closed_form_psi: scenario has no closed form");
}

double closed_form_psi_unrestricted(ScenarioKind kind, const Params& p, double s) {
  switch (kind) {
    case ScenarioKind::Z2Commuting: {
      double lam = param(p, "lambda"), mu = param(p, "mu");
      // 0^s = 0 on zero eigenvalues.
      auto term = [&](double x, double y) {
        if (x <= 0.0 || y <= 0.0) return kNegInf;
        return s * std::log(x) + (1 - s) * std::log(y);
      };
      double v = log_add_exp(term(lam, mu), term(1 - lam, 1 - mu));
      return v;
    }
    case ScenarioKind::TorusPureVsMixed:
    case ScenarioKind::Z2PureVsMixed: {
      double a = interior(p, "alpha");
      return log_add_exp((1 - s) * std::log(a), (1 - s) * std::log1p(-a)) - kLog2;
    }
    case ScenarioKind::TorusTwoPure: {
      double lam = param(p, "lambda"), mu = param(p, "mu");
      return 2.0 * std::log(std::sqrt(lam * mu) + std::sqrt((1 - lam) * (1 - mu)));
    }
    case ScenarioKind::None:
      break;
  }
  throw DomainError("closed_form_psi_unrestricted: scenario has no closed form");
}

double closed_form_psi_derivative(ScenarioKind kind, const Params& p, double s) {
  if (kind != ScenarioKind::TorusPureVsMixed) {
    throw DomainError("closed_form_psi_derivative: only TorusPureVsMixed has an analytic form");
  }
  double a = interior(p, "alpha");
  if (s <= 0.0) return -std::log(std::max(a, 1.0 - a)) - kLog2;
  double e = (1.0 - s) / s;
  double la = e * std::log(a), lb = e * std::log1p(-a);
  double lse = log_add_exp(la, lb);
  double wa = std::exp(la - lse), wb = std::exp(lb - lse);
  return lse - (wa * std::log(a) + wb * std::log1p(-a)) / s - kLog2;
}

PsiCurve closed_form_curve(ScenarioKind kind, const Params& params,
                           const std::vector<double>& grid) {
  return make_curve([kind, params](double s) { return closed_form_psi(kind, params, s); }, grid,
                    0, "psi-closed-form");
}

ConvergenceTable convergence_table(const Scenario& sc, const std::vector<double>& s_grid) {
  validate_scenario(sc);
  std::vector<std::vector<double>> values(sc.n_max + 1);
  for (int n = 1; n <= sc.n_max; ++n) {
    auto [r0, r1] = twirled_pair(sc, n);
    PsiEvaluator ev(r0, r1);
    for (double s : s_grid) values[n].push_back(ev(s) / n);
  }
  ConvergenceTable table;
  std::vector<double> ref(s_grid.size());
  if (sc.kind != ScenarioKind::None) {
    table.reference = "closed-form";
    for (std::size_t k = 0; k < s_grid.size(); ++k)
      ref[k] = closed_form_psi(sc.kind, sc.params, s_grid[k]);
  } else {
    table.reference = "best-n (n=" + std::to_string(sc.n_max) + ")";
    ref = values[sc.n_max];
  }
  std::vector<double> prev_gap(s_grid.size(), kInf);
  for (int n = 1; n <= sc.n_max; ++n) {
    for (std::size_t k = 0; k < s_grid.size(); ++k) {
      double v = values[n][k];
      double gap = (v == ref[k]) ? 0.0 : v - ref[k];
      bool mono = std::isnan(gap) || std::abs(gap) <= std::abs(prev_gap[k]) + 1e-12;
      table.rows.push_back({n, s_grid[k], v, ref[k], gap, mono});
      prev_gap[k] = gap;
    }
  }
  return table;
}

double solve_s_star(double lambda, double mu) {
  if (!(lambda > 0.0 && lambda < mu && mu <= 0.5)) {
    if (lambda == mu) throw DomainError("solve_s_star: degenerate lambda = mu");
    throw DomainError("solve_s_star: requires 0 < lambda < mu <= 1/2");
  }
  const double k = std::log((1 - lambda) * mu / (lambda * (1 - mu)));
  const double target = std::log(mu / (1 - mu));
  auto f = [&](double s) { return s * k - target; };
  if (f(0.0) == 0.0) return 0.0;
  double lo = -1.0;
  while (f(lo) > 0.0) lo *= 2.0;
  return bisect(f, lo, 0.0, 1e-12);
}

double solve_alpha_star() {
  auto f = [](double a) { return -2.0 * (a * std::log(a) + (1 - a) * std::log1p(-a)) - kLog2; };
  double a = bisect(f, 1e-12, 0.5, 1e-12);
  if (a < 0.10 || a > 0.12) {
    throw ConvergenceError("solve_alpha_star: root " + fmt(a) + " outside [0.10, 0.12]");
  }
  return a;
}

double limit_formula_a4(double a, double b, double s) {
  if (a < 0 || b < 0) throw DomainError("limit_formula_a4: a, b must be nonnegative");
  if (s <= 0.0) return std::max(a, b);
  double la = a > 0 ? std::log(a) / s : kNegInf;
  double lb = b > 0 ? std::log(b) / s : kNegInf;
  return std::exp(s * log_add_exp(la, lb));
}

double finite_a4(double a, double b, double s, long n) {
  if (a < 0 || b < 0 || n < 1) throw DomainError("finite_a4: bad arguments");
  const double la = a > 0 ? std::log(a) : kNegInf;
  const double lb = b > 0 ? std::log(b) : kNegInf;
  std::vector<double> terms;
  for (long i = 0; i <= n; ++i) {
    terms.push_back(s * log_binomial(n, i) + klog(static_cast<double>(i), la) +
                    klog(static_cast<double>(n - i), lb));
  }
  return std::exp(log_sum_exp(terms) / static_cast<double>(n));
}

double limit_formula_a5(double a, double b) {
  if (a < 0 || b < 0) throw DomainError("limit_formula_a5: a, b must be nonnegative");
  return a <= b ? a + b : 2.0 * std::sqrt(a * b);
}

double finite_a5(double a, double b, long n) {
  if (a < 0 || b < 0 || n < 1) throw DomainError("finite_a5: bad arguments");
  const double la = a > 0 ? std::log(a) : kNegInf;
  const double lb = b > 0 ? std::log(b) : kNegInf;
  std::vector<double> terms;
  for (long i = 0; i <= n / 2; ++i) {
    terms.push_back(log_binomial(n, i) + klog(static_cast<double>(i), la) +
                    klog(static_cast<double>(n - i), lb));
  }
  return std::exp(log_sum_exp(terms) / static_cast<double>(n));
}

MeanQuantities mean_quantities(const Scenario& sc, const std::vector<double>& r_grid) {
  validate_scenario(sc);
  MeanQuantities mq;
  const std::vector<double> alphas{0.3, 0.5, 0.7};
  mq.unrestricted = divergence_report(sc.rho0, sc.rho1, alphas, r_grid);

  const auto grid = default_s_grid();
  PsiCurve curve;
  bool support_ok = true;
  if (sc.kind != ScenarioKind::None) {
    curve = closed_form_curve(sc.kind, sc.params, grid);
    mq.source = "closed-form";
    mq.error_bar = "exact";
  } else {
    auto [r0, r1] = twirled_pair(sc, sc.n_max);
    curve = psi_curve(r0, r1, grid, sc.n_max).scaled(1.0 / sc.n_max, sc.n_max, "psi_n/n");
    mq.source = "best-n (n=" + std::to_string(sc.n_max) + ")";
    mq.error_bar =
        "on [0,1] psi_n/n is an upper estimate of psi; Chernoff and Hoeffding values are lower "
        "estimates";
  }
  for (int n = 1; n <= sc.n_max && support_ok; ++n) {
    auto [r0, r1] = twirled_pair(sc, n);
    if (PsiEvaluator(r0, r1).mass_outside_support() > 1e-10) support_ok = false;
  }
  for (double a : alphas) mq.mean.renyi_alpha[a] = curve.at(a) / (a - 1.0);
  mq.mean.chernoff = chernoff_distance(curve);
  for (double r : r_grid) mq.mean.hoeffding[r] = hoeffding_distance(curve, r);
  mq.mean.relative_entropy =
      support_ok ? left_derivative([&](double s) { return curve.at(s); }, 1.0) : kInf;
  if (is_invariant(sc.rho1.op(), sc.action)) {
    mq.mean.fidelity = fidelity(sc.rho0, sc.rho1);
  } else {
    auto [r0, r1] = twirled_pair(sc, sc.n_max);
    mq.mean.fidelity = std::pow(fidelity(r0, r1), 1.0 / sc.n_max);
  }
  return mq;
}

}  // namespace symtest
