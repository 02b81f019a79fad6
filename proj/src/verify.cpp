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

#include "symtest/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symtest/divergences.hpp"
#include "symtest/groups.hpp"
#include "symtest/hypothesis.hpp"
#include "symtest/numeric.hpp"

namespace symtest {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string at_n(int n) { return " (n=" + std::to_string(n) + ")"; }

// Absolute tolerance scaled by the magnitude of the compared value.
double scaled_tol(double tol, double x) {
  return tol * std::max(1.0, std::isfinite(x) ? std::abs(x) : 1.0);
}

double entropy(const DensityOperator& rho) {
  double h = 0.0;
  for (Index i = 0; i < rho.spectrum().eigenvalues.size(); ++i) {
    double l = rho.spectrum().eigenvalues(i);
    if (l > 0.0) h -= l * std::log(l);
  }
  return h;
}

double renyi_entropy(const DensityOperator& rho, double alpha) {
  std::vector<double> logs;
  for (Index i = 0; i < rho.spectrum().eigenvalues.size(); ++i) {
    double l = rho.spectrum().eigenvalues(i);
    if (l > 0.0) logs.push_back(alpha * std::log(l));
  }
  return log_sum_exp(logs) / (1.0 - alpha);
}

// Cached twirled n-fold pairs, n = 1..n_max.
struct Pairs {
  std::vector<DensityOperator> r0, r1;
  explicit Pairs(const Scenario& sc) : r0(sc.n_max + 1), r1(sc.n_max + 1) {
    for (int n = 1; n <= sc.n_max; ++n) std::tie(r0[n], r1[n]) = twirled_pair(sc, n);
  }
};

CheckReport twirl_data_processing(const Scenario& sc, const Pairs& p) {
  CheckReport rep(sc.name + ": psi under the twirl");
  PsiEvaluator before(sc.rho0, sc.rho1), after(p.r0[1], p.r1[1]);
  for (double s : linspace(0.0, 1.0, 21)) {
    rep.expect_ge(after(s), before(s), scaled_tol(1e-8, after(s)),
                  "psi(twirl) >= psi at s=" + fmt(s));
  }
  if (support_invariant(sc.rho1, sc.action)) {
    for (double s : linspace(1.0, 2.0, 21)) {
      rep.expect_le(after(s), before(s), scaled_tol(1e-8, after(s)),
                    "psi(twirl) <= psi at s=" + fmt(s));
    }
  } else {
    rep.skip("[1,2] direction: supp rho1 not invariant");
  }
  return rep;
}

CheckReport subadditivity(const Scenario& sc, const Pairs& p) {
  CheckReport rep(sc.name + ": psi_{n+m} vs psi_n + psi_m");
  const bool inv = support_invariant(sc.rho1, sc.action);
  if (!inv) rep.skip("superadditivity on [1,2]: supp rho1 not invariant");
  for (auto [n, m] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    if (n + m > sc.n_max) {
      rep.skip("(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ") beyond n_max");
      continue;
    }
    PsiEvaluator en(p.r0[n], p.r1[n]), em(p.r0[m], p.r1[m]), enm(p.r0[n + m], p.r1[n + m]);
    const std::string tag = " (n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
    for (double s : linspace(0.0, 1.0, 11)) {
      double lhs = enm(s), rhs = en(s) + em(s);
      rep.expect_le(lhs, rhs, scaled_tol(1e-8, lhs), "subadditive at s=" + fmt(s) + tag);
    }
    if (inv) {
      for (double s : linspace(1.0, 2.0, 11)) {
        double lhs = enm(s), rhs = en(s) + em(s);
        rep.expect_ge(lhs, rhs, scaled_tol(1e-8, lhs), "superadditive at s=" + fmt(s) + tag);
      }
    }
  }
  return rep;
}

CheckReport renyi_superadditivity(const Scenario& sc, const Pairs& p) {
  CheckReport rep(sc.name + ": Renyi superadditivity");
  for (auto [n, m] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    if (n + m > sc.n_max) continue;
    const std::string tag = " (n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
    for (double a : {0.0, 0.3, 0.7}) {
      double lhs = renyi(p.r0[n + m], p.r1[n + m], a);
      double rhs = renyi(p.r0[n], p.r1[n], a) + renyi(p.r0[m], p.r1[m], a);
      rep.expect_ge(lhs, rhs, scaled_tol(1e-8, lhs), "S_a(n+m) >= S_a(n) + S_a(m), a=" + fmt(a) + tag);
    }
    // Against the maximally mixed alternative this is subadditivity of the
    // Renyi entropy of the twirled rho0.
    for (double a : {0.3, 0.7}) {
      double lhs = renyi_entropy(p.r0[n + m], a);
      double rhs = renyi_entropy(p.r0[n], a) + renyi_entropy(p.r0[m], a);
      rep.expect_le(lhs, rhs, scaled_tol(1e-8, lhs), "H_a(n+m) <= H_a(n) + H_a(m), a=" + fmt(a) + tag);
    }
  }
  return rep;
}

CheckReport lieb(const Scenario& sc) {
  CheckReport rep(sc.name + ": Lieb/Ando bounds");
  for (int n = 1; n <= sc.n_max; ++n) {
    rep.merge(lieb_bound_check(sc.rho0, sc.rho1, sc.action, n, default_s_grid()));
  }
  return rep;
}

CheckReport tests_checks(const Scenario& sc, const Pairs& p) {
  CheckReport rep(sc.name + ": P_min sandwich, NP optimality, fidelity sandwich");
  for (int n = 1; n <= sc.n_max; ++n) {
    for (double a : {-0.2, 0.0, 0.3}) {
      rep.merge(audenaert_sandwich(p.r0[n], p.r1[n], a, n).report);
      TestOperator t = np_test(p.r0[n], p.r1[n], a, n);
      ErrorPair e = error_pair(t, p.r0[n], p.r1[n]);
      double pm = p_min(p.r0[n], p.r1[n], a, n);
      rep.expect_near(std::exp(-n * a) * e.beta0 + e.beta1, pm, 1e-9,
                      "e^{-na} beta0 + beta1 of the NP test = P_min, a=" + fmt(a) + at_n(n));
    }
    rep.merge(fidelity_sandwich(p.r0[n], p.r1[n]));
    // Restricted tests cannot beat unrestricted ones at a = 0.
    double lp = std::log(p_min(p.r0[n], p.r1[n], 0.0, n)) / n;
    double rhs = 2.0 * psi(p.r0[n], p.r1[n], 0.5) / n - std::log(2.0) / n;
    rep.expect_ge(lp, rhs, 1e-9, "(1/n) log P_min >= (2 psi_n(1/2) - log 2)/n" + at_n(n));
  }
  return rep;
}

CheckReport fidelity_checks(const Scenario& sc, const Pairs& p, bool invariant) {
  CheckReport rep(sc.name + ": fidelity growth");
  const double f1 = fidelity(sc.rho0, sc.rho1);
  for (int n = 1; n <= sc.n_max; ++n) {
    double fn = fidelity(p.r0[n], p.r1[n]);
    rep.expect_ge(fn, std::pow(f1, n), 1e-9, "F(rho0n, rho1n) >= F^n" + at_n(n));
  }
  if (!invariant) {
    rep.skip("(1/n) log F monotone along doubling: rho1 not invariant");
    return rep;
  }
  double prev = kInf;
  for (int n = 1; n <= sc.n_max; n *= 2) {
    double v = std::log(fidelity(p.r0[n], p.r1[n])) / n;
    rep.expect_le(v, prev, 1e-9, "(1/n) log F nonincreasing along doubling" + at_n(n));
    rep.expect_ge(v, std::log(f1), 1e-9, "(1/n) log F >= log F(rho0, rho1)" + at_n(n));
    prev = v;
  }
  return rep;
}

CheckReport abs_power_checks(const Scenario& sc, const Pairs& p) {
  CheckReport rep(sc.name + ": Tr|rho0n^s rho1n^(1-s)| bounds");
  for (int n = 1; n <= sc.n_max; ++n) {
    BlockStructure bs = block_structure(sc.action, n);
    const double pref = std::pow(static_cast<double>(bs.sum_irrep_dims()), 2);
    for (double s : linspace(0.0, 1.0, 9)) {
      double one = abs_power_trace(sc.rho0, sc.rho1, s);
      double lhs = abs_power_trace(p.r0[n], p.r1[n], s);
      if (s >= 0.5) {
        double rhs = pref * std::pow(one, n);
        rep.expect_le(lhs, rhs, scaled_tol(1e-9, rhs),
                      "<= (sum d_i)^2 (Tr|..|)^n at s=" + fmt(s) + at_n(n));
      }
      if (s <= 0.5) {
        double rhs = std::pow(one, n);
        rep.expect_ge(lhs, rhs, scaled_tol(1e-9, rhs), ">= (Tr|..|)^n at s=" + fmt(s) + at_n(n));
      }
    }
  }
  return rep;
}

CheckReport restricted_vs_unrestricted(const Scenario& sc, const Pairs& p) {
  CheckReport rep(sc.name + ": restricted P_min vs unrestricted");
  for (int n = 1; n <= sc.n_max; ++n) {
    DensityOperator u0(kron_power(sc.rho0.matrix(), n)), u1(kron_power(sc.rho1.matrix(), n));
    double restricted = std::log(p_min(p.r0[n], p.r1[n], 0.0, n)) / n;
    double unrestricted = std::log(p_min(u0, u1, 0.0, n)) / n;
    rep.expect_ge(restricted, unrestricted, 1e-9, "(1/n) log P_min restricted >= unrestricted" + at_n(n));
  }
  return rep;
}

// Pinching by the spectral blocks of rho1^{xn} inside each isotypic block.
CheckReport pinching_checks(const Scenario& sc, const Pairs& p) {
  CheckReport rep(sc.name + ": relative entropy under pinching");
  const double s1 = relative_entropy(sc.rho0, sc.rho1);
  const double d = static_cast<double>(sc.rho0.dim());
  for (int n = 1; n <= sc.n_max; ++n) {
    double sn = relative_entropy(p.r0[n], p.r1[n]);
    rep.expect_le(sn / n, s1, scaled_tol(1e-9, s1), "S(rho0n||rho1n)/n <= S(rho0||rho1)" + at_n(n));

    GroupAction gn = tensor_power(sc.action, n);
    BlockStructure bs = block_structure(gn);
    DensityOperator r0n(kron_power(sc.rho0.matrix(), n));
    const DensityOperator& r1n = p.r1[n];
    std::vector<HermitianOperator> eproj = spectral_projections(r1n.op());
    std::vector<HermitianOperator> projs;
    for (const auto& blk : bs.blocks) {
      ComplexMatrix q = blk.basis * blk.basis.adjoint();
      for (const auto& e : eproj) {
        ComplexMatrix pr = q * e.matrix();
        if (pr.cwiseAbs().maxCoeff() < 1e-9) continue;
        projs.emplace_back((pr + pr.adjoint()) * 0.5, 1e-8);
      }
    }
    DensityOperator pinched(pinching_map(r0n.op(), gn, projs));
    double spin = relative_entropy(pinched, r1n);
    rep.expect_le(spin, sn, scaled_tol(1e-9, sn), "S(pinched||rho1n) <= S(rho0n||rho1n)" + at_n(n));
    double cost = entropy(pinched) - entropy(r0n);
    double bound = d * std::log(n + 1.0) + 2.0 * std::log(static_cast<double>(bs.sum_irrep_dims()));
    rep.expect_le(cost, bound, 1e-9, "S(pinched) - S(rho0^n) <= d log(n+1) + 2 log sum d_i" + at_n(n));
    if (std::isfinite(s1)) {
      rep.expect_near(n * s1, spin + cost, 1e-7 * std::max(1.0, n * s1),
                      "n S = S(pinched||rho1n) + S(pinched) - S(rho0^n)" + at_n(n));
    }
  }
  return rep;
}

CheckReport convergence_checks(const Scenario& sc) {
  CheckReport rep(sc.name + ": psi_n/n against the limit");
  if (sc.kind == ScenarioKind::None) {
    rep.skip("no closed form");
    return rep;
  }
  const bool inv = support_invariant(sc.rho1, sc.action);
  ConvergenceTable t = convergence_table(sc, default_s_grid());
  for (const auto& row : t.rows) {
    if (row.s >= 0.0 && row.s <= 1.0) {
      rep.expect_ge(row.value, row.closed_form, 1e-8,
                    "psi_n/n >= psi at s=" + fmt(row.s) + at_n(row.n));
    } else if (inv && row.s >= 1.0 && row.s <= 2.0) {
      rep.expect_le(row.value, row.closed_form, 1e-8,
                    "psi_n/n <= psi at s=" + fmt(row.s) + at_n(row.n));
    }
  }
  if (!inv) rep.skip("[1,2] direction: supp rho1 not invariant");
  return rep;
}

}  // namespace

std::vector<CheckReport> verify_scenario(const Scenario& sc) {
  validate_scenario(sc);
  Pairs p(sc);
  const bool invariant = is_invariant(sc.rho1.op(), sc.action);
  std::vector<CheckReport> out;
  out.push_back(lieb(sc));
  out.push_back(twirl_data_processing(sc, p));
  out.push_back(subadditivity(sc, p));
  out.push_back(renyi_superadditivity(sc, p));
  out.push_back(tests_checks(sc, p));
  out.push_back(fidelity_checks(sc, p, invariant));
  out.push_back(convergence_checks(sc));
  if (invariant) {
    out.push_back(abs_power_checks(sc, p));
    out.push_back(restricted_vs_unrestricted(sc, p));
    out.push_back(pinching_checks(sc, p));
  } else {
    CheckReport skipped(sc.name + ": invariant-rho1 checks");
    skipped.skip("rho1 is not G-invariant: Tr|..| bounds, restricted-vs-unrestricted P_min and "
                 "pinching skipped");
    out.push_back(skipped);
  }
  return out;
}

std::vector<CheckReport> verify_random(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckReport> out;

  CheckReport fid("random: Tr rho^s sigma^(1-s) >= F^2");
  for (int k = 0; k < 50; ++k) {
    Index dim = 2 + k % 3;
    DensityOperator a = random_density(dim, rng, k % 4 == 3 ? 1 : 0);
    DensityOperator b = random_density(dim, rng);
    double f2 = std::pow(fidelity(a, b), 2);
    PsiEvaluator ev(a, b);
    for (double s : linspace(0.0, 1.0, 11)) {
      double v = ev(s);
      fid.expect_ge(v == kNegInf ? 0.0 : std::exp(v), f2, 1e-9,
                    "pair " + std::to_string(k) + " s=" + fmt(s));
    }
  }
  out.push_back(fid);

  // Actions used by the random batteries.
  ComplexMatrix z = ComplexMatrix::Identity(2, 2);
  z(1, 1) = -1.0;
  ComplexMatrix c = ComplexMatrix::Zero(3, 3);
  const cplx w = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);
  c(0, 0) = 1.0;
  c(1, 1) = w;
  c(2, 2) = w * w;
  std::vector<GroupAction> actions{GroupAction::finite({ComplexMatrix::Identity(2, 2), z}),
                                   GroupAction::torus({0, 1}),
                                   GroupAction::finite({ComplexMatrix::Identity(3, 3), c, c * c}),
                                   GroupAction::torus({0, 1, 2})};

  CheckReport dp("random: psi under the twirl");
  for (int k = 0; k < 20; ++k) {
    const GroupAction& g = actions[k % actions.size()];
    DensityOperator a = random_density(g.dim(), rng);
    DensityOperator b = random_density(g.dim(), rng);
    // Every other instance gets an invariant alternative.
    if (k % 2) b = twirled_power(b, g, 1);
    PsiEvaluator before(a, b), after(twirled_power(a, g, 1), twirled_power(b, g, 1));
    for (double s : linspace(0.0, 1.0, 11)) {
      dp.expect_ge(after(s), before(s), 1e-8, "instance " + std::to_string(k) + " s=" + fmt(s));
    }
    if (support_invariant(b, g)) {
      for (double s : linspace(1.0, 2.0, 11)) {
        dp.expect_le(after(s), before(s), scaled_tol(1e-8, after(s)),
                     "instance " + std::to_string(k) + " s=" + fmt(s));
      }
    }
  }
  out.push_back(dp);

  CheckReport sand("random: P_min sandwich and NP optimality");
  for (int k = 0; k < 50; ++k) {
    DensityOperator a = random_density(2, rng), b = random_density(2, rng);
    for (int n = 1; n <= 3; ++n) {
      DensityOperator an = twirled_power(a, actions[1], n), bn = twirled_power(b, actions[1], n);
      for (double x : {-0.2, 0.0, 0.3}) {
        AudenaertResult r = audenaert_sandwich(an, bn, x, n);
        sand.merge(r.report);
        if (k < 5) {
          const double w = std::exp(-n * x);
          for (int t = 0; t < 100; ++t) {
            TestOperator test(random_test_operator(an.dim(), rng));
            ErrorPair e = error_pair(test, an, bn);
            sand.expect_le(r.p_min, w * e.beta0 + e.beta1, 1e-9,
                           "random test does not beat P_min, pair " + std::to_string(k));
          }
        }
      }
    }
  }
  out.push_back(sand);
  return out;
}

std::vector<CheckReport> verify_mean_chernoff() {
  std::vector<CheckReport> out;
  CheckReport band("torus pure-vs-mixed: C/4 <= C_M <= C");
  const auto grid = default_s_grid();
  for (double a : {0.11, 0.3, 0.5, 0.8}) {
    Scenario sc = torus_pure_vs_mixed_scenario(a, 1);
    double c = chernoff_distance(psi_curve(sc.rho0, sc.rho1, grid));
    double cm = chernoff_distance(closed_form_curve(sc.kind, sc.params, grid));
    band.expect_le(c / 4.0, cm, 1e-9, "C/4 <= C_M, alpha=" + fmt(a));
    band.expect_le(cm, c, 1e-9, "C_M <= C, alpha=" + fmt(a));
    band.expect_le(c / 2.0, cm, 1e-9, "C/2 <= C_M (psi differentiable), alpha=" + fmt(a));
  }
  out.push_back(band);

  CheckReport chain("Z2 family: C_M <= min_g C(rho0, rho1 o Ad u_g) <= C");
  for (auto [l, m] : {std::pair{0.2, 0.7}, std::pair{0.2, 0.4}, std::pair{0.65, 0.1}}) {
    Scenario sc = z2_commuting_scenario(l, m, 1);
    double c = chernoff_distance(psi_curve(sc.rho0, sc.rho1, grid));
    double best = kInf;
    for (const auto& u : sc.action.unitaries()) {
      DensityOperator moved(u * sc.rho1.matrix() * u.adjoint());
      best = std::min(best, chernoff_distance(psi_curve(sc.rho0, moved, grid)));
    }
    double cm = chernoff_distance(closed_form_curve(sc.kind, sc.params, grid));
    const std::string tag = " (lambda,mu)=(" + fmt(l) + "," + fmt(m) + ")";
    chain.expect_le(cm, best, 1e-9, "C_M <= min_g C" + tag);
    chain.expect_le(best, c, 1e-9, "min_g C <= C" + tag);
    chain.expect_near(cm, best, 1e-8, "C_M = min_g C" + tag);
    if ((0.5 - l) * (0.5 - m) < 0.0) chain.expect(cm < c - 1e-6, "C_M < C strictly" + tag);
  }
  out.push_back(chain);
  return out;
}

std::vector<Scenario> reference_scenarios(int n_max) {
  std::vector<Scenario> v;
  v.push_back(z2_commuting_scenario(0.2, 0.7, n_max));
  v.push_back(torus_pure_vs_mixed_scenario(0.3, n_max));
  v.push_back(torus_two_pure_scenario(0.3, 0.6, n_max));
  v.push_back(z2_pure_vs_mixed_scenario(0.3, n_max));
  Scenario ext = z2_commuting_scenario(0.0, 1.0, n_max);
  ext.name = "z2-commuting-extremal";
  ext.kind = ScenarioKind::None;  // the closed form needs interior parameters
  v.push_back(ext);
  return v;
}

std::vector<CheckReport> verify_reference_suite(int n_max, std::uint64_t seed) {
  std::vector<CheckReport> out;
  for (const auto& sc : reference_scenarios(n_max)) {
    auto r = verify_scenario(sc);
    out.insert(out.end(), r.begin(), r.end());
  }
  auto r = verify_random(seed);
  out.insert(out.end(), r.begin(), r.end());
  auto m = verify_mean_chernoff();
  out.insert(out.end(), m.begin(), m.end());
  return out;
}

std::size_t count_violations(const std::vector<CheckReport>& reports) {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.violations().size();
  return n;
}

}  // namespace symtest
