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

#include "symtest/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symtest/error.hpp"
#include "symtest/numeric.hpp"

namespace symtest {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void same_dim(const DensityOperator& a, const DensityOperator& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimensions " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()) + " differ");
  }
}

HermitianOperator positive_part_projection(const ComplexMatrix& d) {
  Spectrum sp = eig_hermitian((d + d.adjoint()) * 0.5);
  const double tol = rank_tol(sp.eigenvalues);
  ComplexMatrix p = reconstruct(sp, [&](double x) { return x > tol ? 1.0 : 0.0; });
  return HermitianOperator((p + p.adjoint()) * 0.5);
}

}  // namespace

TestOperator::TestOperator(const HermitianOperator& op) {
  Spectrum sp = eig(op);
  bool clip = false;
  for (Index i = 0; i < sp.eigenvalues.size(); ++i) {
    double v = sp.eigenvalues(i);
    if (v < -1e-9 || v > 1.0 + 1e-9) {
      throw DomainError("TestOperator: eigenvalue " + fmt(v) + " outside [0,1]");
    }
    if (v < 0.0 || v > 1.0) clip = true;
  }
  if (clip) {
    ComplexMatrix m = reconstruct(sp, [](double x) { return std::clamp(x, 0.0, 1.0); });
    op_ = HermitianOperator((m + m.adjoint()) * 0.5);
  } else {
    op_ = op;
  }
}

ErrorPair error_pair(const TestOperator& t, const DensityOperator& rho0n,
                     const DensityOperator& rho1n) {
  same_dim(rho0n, rho1n, "error_pair");
  if (t.matrix().rows() != rho0n.dim()) throw DimensionError("error_pair: test dimension mismatch");
  double acc0 = (rho0n.matrix() * t.matrix()).trace().real();
  double acc1 = (rho1n.matrix() * t.matrix()).trace().real();
  return {std::clamp(1.0 - acc0, 0.0, 1.0), std::clamp(acc1, 0.0, 1.0)};
}

TestOperator np_test(const DensityOperator& rho0n, const DensityOperator& rho1n, double a, int n) {
  same_dim(rho0n, rho1n, "np_test");
  ComplexMatrix d = std::exp(-n * a) * rho0n.matrix() - rho1n.matrix();
  return TestOperator(positive_part_projection(d));
}

double p_min(const DensityOperator& rho0n, const DensityOperator& rho1n, double a, int n) {
  same_dim(rho0n, rho1n, "p_min");
  const double w = std::exp(-n * a);
  ComplexMatrix d = w * rho0n.matrix() - rho1n.matrix();
  double v = 0.5 * (1.0 + w) - 0.5 * trace_norm((d + d.adjoint()) * 0.5);
  return std::max(v, 0.0);
}

double p_err_symmetric(const DensityOperator& rho0n, const DensityOperator& rho1n) {
  return 0.5 * p_min(rho0n, rho1n, 0.0, 1);
}

AudenaertResult audenaert_sandwich(const DensityOperator& rho0n, const DensityOperator& rho1n,
                                   double a, int n) {
  AudenaertResult res{0, 0, 0, CheckReport("audenaert n=" + std::to_string(n) + " a=" + fmt(a))};
  PsiEvaluator ev(rho0n, rho1n);
  res.p_min = p_min(rho0n, rho1n, a, n);
  const double na = n * a;
  Extremum e = minimize_bracketed([&](double s) { return -na * s + ev(s); }, 0.0, 1.0,
                                  linspace(0.0, 1.0, 101));
  res.upper = std::exp(e.value);
  const double w = std::exp(-na);
  res.lower = w / (1.0 + w) * std::exp(2.0 * ev(0.5));
  const double tol = 1e-9 * std::max(1.0, res.p_min);
  res.report.expect_le(res.p_min, res.upper, tol, "p_min <= min_s e^{-nas} Tr rho0^s rho1^{1-s}");
  res.report.expect_le(res.lower, res.p_min, tol,
                       "e^{-na}/(1+e^{-na}) (Tr rho0^{1/2} rho1^{1/2})^2 <= p_min");
  return res;
}

BetaEpsSolver::BetaEpsSolver(const DensityOperator& rho0n, const DensityOperator& rho1n)
    : rho0_(rho0n), rho1_(rho1n) {
  same_dim(rho0n, rho1n, "beta_eps");
  const ComplexMatrix& a = rho0n.matrix();
  const ComplexMatrix& b = rho1n.matrix();
  double comm = (a * b - b * a).cwiseAbs().maxCoeff();
  if (comm > 1e-12) return;

  // Joint diagonalization: eigenspaces of rho1, then rho0 compressed to each.
  const Spectrum& s1 = rho1n.spectrum();
  const RealVector& mu = s1.eigenvalues;
  const double scale = std::max(1e-300, mu.cwiseAbs().maxCoeff());
  const double tol1 = rank_tol(mu);
  Index start = 0;
  double total_p = 0.0;
  for (Index i = 1; i <= mu.size(); ++i) {
    bool split = i == mu.size() ||
                 mu(i) - mu(i - 1) > 1e-9 * std::max(std::abs(mu(i)), 1e-3 * scale);
    if (!split) continue;
    ComplexMatrix v = s1.eigenvectors.middleCols(start, i - start);
    ComplexMatrix c = v.adjoint() * a * v;
    Spectrum cs = eig_hermitian((c + c.adjoint()) * 0.5);
    double q = mu.segment(start, i - start).mean();
    if (q <= tol1) q = 0.0;
    for (Index k = 0; k < cs.eigenvalues.size(); ++k) {
      double p = std::max(cs.eigenvalues(k), 0.0);
      total_p += p;
      if (p > 0.0 || q > 0.0) outcomes_.push_back({p, q});
    }
    start = i;
  }
  if (std::abs(total_p - 1.0) > 1e-8) return;
  double total_q = 0.0;
  for (auto& o : outcomes_) total_q += o.q;
  for (auto& o : outcomes_) o.p /= total_p;
  for (auto& o : outcomes_) o.q /= total_q;
  // Likelihood ratio p/q, descending; q = 0 is +inf.
  std::stable_sort(outcomes_.begin(), outcomes_.end(), [](const Outcome& x, const Outcome& y) {
    return x.p * y.q > y.p * x.q;
  });
  commuting_ = true;
}

BetaEpsResult BetaEpsSolver::solve(double eps) const {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("beta_eps: eps must lie in (0,1)");
  return commuting_ ? solve_classical(eps) : solve_sweep(eps);
}

BetaEpsResult BetaEpsSolver::solve_classical(double eps) const {
  const double need = 1.0 - eps;  // acceptance mass under rho0
  double cum_p = 0.0, cum_q = 0.0;
  for (const auto& o : outcomes_) {
    if (o.p <= 0.0) break;  // only zero-ratio outcomes remain
    if (cum_p + o.p >= need) {
      double f = (need - cum_p) / o.p;
      double t = o.q > 0.0 ? o.p / o.q : kInf;
      return {cum_q + f * o.q, eps, t, f, cum_q + o.q, true};
    }
    cum_p += o.p;
    cum_q += o.q;
  }
  return {cum_q, std::max(0.0, 1.0 - cum_p), 0.0, 1.0, cum_q, true};
}

ErrorPair BetaEpsSolver::threshold_errors(double log_t) const {
  ComplexMatrix d = rho0_.matrix() - std::exp(log_t) * rho1_.matrix();
  TestOperator t(positive_part_projection(d));
  return error_pair(t, rho0_, rho1_);
}

BetaEpsResult BetaEpsSolver::solve_sweep(double eps) const {
  // beta0 of {rho0 - t rho1 > 0} is nondecreasing in t.
  const int points = 512;
  const double lo_log = -60.0, hi_log = 60.0;
  double prev_log = lo_log;
  ErrorPair prev = threshold_errors(lo_log);
  if (prev.beta0 > eps) {
    // Mix with T = I, which has beta0 = 0 and beta1 = 1.
    double f = eps / prev.beta0;
    return {(1.0 - f) + f * prev.beta1, eps, std::exp(lo_log), f, 1.0, false};
  }
  double next_log = hi_log;
  ErrorPair next{1.0, 0.0};
  bool found = false;
  for (int k = 1; k < points; ++k) {
    double lt = lo_log + (hi_log - lo_log) * k / (points - 1);
    ErrorPair e = threshold_errors(lt);
    if (e.beta0 > eps) {
      next_log = lt;
      next = e;
      found = true;
      break;
    }
    prev_log = lt;
    prev = e;
  }
  if (!found) return {prev.beta1, prev.beta0, std::exp(prev_log), 0.0, prev.beta1, false};
  for (int it = 0; it < 100 && next_log - prev_log > 1e-13; ++it) {
    double mid = 0.5 * (prev_log + next_log);
    ErrorPair e = threshold_errors(mid);
    if (e.beta0 > eps) {
      next_log = mid;
      next = e;
    } else {
      prev_log = mid;
      prev = e;
    }
  }
  // Mix the adjacent tests so that beta0 = eps exactly.
  double f = (eps - prev.beta0) / (next.beta0 - prev.beta0);
  double b1 = prev.beta1 + f * (next.beta1 - prev.beta1);
  return {b1, eps, std::exp(prev_log), f, prev.beta1, false};
}

double beta_eps(const DensityOperator& rho0n, const DensityOperator& rho1n, double eps) {
  return BetaEpsSolver(rho0n, rho1n).solve(eps).beta1;
}

double strong_converse_bound(const PsiCurve& psi_n, double eps, double a, int n) {
  const double na = n * a;
  double phit = lf_phi_tilde(psi_n, na);
  return std::exp(-na) * (1.0 - eps - std::exp(-phit));
}

double strong_converse_bound(const DensityOperator& rho0n, const DensityOperator& rho1n,
                             double eps, double a, int n) {
  PsiCurve c = psi_curve(rho0n, rho1n, linspace(1.0, 1.5, 51), n, "psi_n");
  return strong_converse_bound(c, eps, a, n);
}

std::vector<double> strong_converse_a_grid(const PsiCurve& normalized) {
  auto f = [&](double s) { return normalized.at(s); };
  double left = left_derivative(f, 1.0);
  double right = right_derivative(f, 1.0);
  return linspace(left - 0.5, right + 0.5, 21);
}

CheckReport fidelity_sandwich(const DensityOperator& rho0n, const DensityOperator& rho1n) {
  CheckReport rep("fidelity-sandwich");
  double f = fidelity(rho0n, rho1n);
  double p = p_err_symmetric(rho0n, rho1n);
  rep.expect_le((1.0 - std::sqrt(std::max(0.0, 1.0 - f * f))) / 2.0, p, 1e-9,
                "(1 - sqrt(1 - F^2))/2 <= P_err");
  rep.expect_le(p, f / 2.0, 1e-9, "P_err <= F/2");
  return rep;
}

}  // namespace symtest
