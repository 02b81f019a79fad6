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

#include "symtest/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symtest/error.hpp"

namespace symtest {

namespace {

// Overlaps below this are rounding noise between orthogonal eigenvectors.
constexpr double kOverlapFloor = 1e-24;
// Tr rho0 (I - supp rho1) above this breaks supp rho0 <= supp rho1.
constexpr double kSupportMass = 1e-10;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

PsiEvaluator::PsiEvaluator(const DensityOperator& rho0, const DensityOperator& rho1) {
  if (rho0.dim() != rho1.dim()) {
    throw DimensionError("psi: dimensions " + std::to_string(rho0.dim()) + " and " +
                         std::to_string(rho1.dim()) + " differ");
  }
  const Spectrum& s0 = rho0.spectrum();
  const Spectrum& s1 = rho1.spectrum();
  const double tol0 = rank_tol(s0.eigenvalues);
  const double tol1 = rank_tol(s1.eigenvalues);
  std::vector<Index> supp0;
  for (Index i = 0; i < s0.eigenvalues.size(); ++i)
    if (s0.eigenvalues(i) > tol0) supp0.push_back(i);
  ComplexMatrix v0(rho0.dim(), static_cast<Index>(supp0.size()));
  for (std::size_t k = 0; k < supp0.size(); ++k) v0.col(static_cast<Index>(k)) = s0.eigenvectors.col(supp0[k]);
  ComplexMatrix m = v0.adjoint() * s1.eigenvectors;

  for (std::size_t k = 0; k < supp0.size(); ++k) {
    const double l = s0.eigenvalues(supp0[k]);
    l0_.push_back(l);
    log_l0_.push_back(std::log(l));
    double outside = 0.0;
    for (Index j = 0; j < s1.eigenvalues.size(); ++j) {
      double o = std::norm(m(static_cast<Index>(k), j));
      const double mu = s1.eigenvalues(j);
      if (mu > tol1) {
        if (o > kOverlapFloor) {
          terms_.push_back({std::log(l), std::log(mu), std::log(o)});
          cross_ += l * o * std::log(mu);
        }
      } else {
        outside += o;
      }
    }
    outside_mass_ += l * outside;
  }
}

double PsiEvaluator::operator()(double s) const {
  if (std::isnan(s)) throw DomainError("psi: s is NaN");
  std::vector<double> logs;
  logs.reserve(terms_.size());
  for (const auto& t : terms_) logs.push_back(s * t.log_l0 + (1.0 - s) * t.log_l1 + t.log_overlap);
  double v = log_sum_exp(logs);
  if (v <= std::log(kTraceFloor)) return kNegInf;
  return v;
}

double PsiEvaluator::relative_entropy() const {
  if (outside_mass_ > kSupportMass) return kInf;
  double ent = 0.0;
  for (std::size_t i = 0; i < l0_.size(); ++i) ent += l0_[i] * log_l0_[i];
  return ent - cross_;
}

double psi(const DensityOperator& rho0, const DensityOperator& rho1, double s) {
  return PsiEvaluator(rho0, rho1)(s);
}

double PsiCurve::at(double s) const {
  if (evaluator) return evaluator(s);
  if (s_grid.empty() || s < s_grid.front() - 1e-12 || s > s_grid.back() + 1e-12) {
    throw DomainError("PsiCurve: s = " + fmt(s) + " outside the sampled grid");
  }
  auto it = std::lower_bound(s_grid.begin(), s_grid.end(), s);
  if (it == s_grid.end()) return values.back();
  std::size_t i = static_cast<std::size_t>(it - s_grid.begin());
  if (*it == s || i == 0) return values[i];
  double x0 = s_grid[i - 1], x1 = s_grid[i];
  double y0 = values[i - 1], y1 = values[i];
  if (std::isinf(y0) || std::isinf(y1)) return std::min(y0, y1);
  return y0 + (y1 - y0) * (s - x0) / (x1 - x0);
}

bool PsiCurve::covers(double lo, double hi) const {
  return !s_grid.empty() && s_grid.front() <= lo + 1e-12 && s_grid.back() >= hi - 1e-12;
}

double PsiCurve::convexity_defect() const {
  double scale = 1.0;
  for (double v : values)
    if (std::isfinite(v)) scale = std::max(scale, std::abs(v));
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    double f0 = values[i - 1], f1 = values[i], f2 = values[i + 1];
    if (!std::isfinite(f0) || !std::isfinite(f1) || !std::isfinite(f2)) continue;
    double x0 = s_grid[i - 1], x1 = s_grid[i], x2 = s_grid[i + 1];
    double chord = ((x2 - x1) * f0 + (x1 - x0) * f2) / (x2 - x0);
    worst = std::max(worst, (f1 - chord) / scale);
  }
  return worst;
}

PsiCurve PsiCurve::scaled(double factor, int new_n, const std::string& new_label) const {
  PsiCurve out = *this;
  for (auto& v : out.values) v *= factor;
  out.n = new_n;
  out.label = new_label;
  if (evaluator) {
    auto f = evaluator;
    out.evaluator = [f, factor](double s) { return factor * f(s); };
  }
  return out;
}

PsiCurve make_curve(std::function<double(double)> f, const std::vector<double>& grid, int n,
                    const std::string& label) {
  if (!std::is_sorted(grid.begin(), grid.end()) ||
      std::adjacent_find(grid.begin(), grid.end()) != grid.end()) {
    throw DomainError("psi curve: grid must be strictly ascending");
  }
  PsiCurve c;
  c.s_grid = grid;
  c.n = n;
  c.label = label;
  c.values.reserve(grid.size());
  for (double s : grid) {
    double v = f(s);
    if (std::isnan(v)) throw DomainError("psi curve: NaN at s = " + fmt(s));
    c.values.push_back(v);
  }
  c.evaluator = std::move(f);
  return c;
}

PsiCurve psi_curve(const DensityOperator& rho0, const DensityOperator& rho1,
                   const std::vector<double>& grid, int n, const std::string& label) {
  auto ev = std::make_shared<PsiEvaluator>(rho0, rho1);
  PsiCurve c = make_curve([ev](double s) { return (*ev)(s); }, grid, n, label);
  double defect = c.convexity_defect();
  if (defect > 1e-7) {
    throw ConvergenceError("psi curve '" + label + "' fails discrete convexity (defect " +
                           fmt(defect) + ")");
  }
  return c;
}

double renyi(const DensityOperator& rho0, const DensityOperator& rho1, double alpha) {
  if (alpha == 1.0) {
    throw DomainError("renyi: alpha = 1 is the relative entropy; call relative_entropy");
  }
  PsiEvaluator ev(rho0, rho1);
  if (alpha > 1.0 && ev.mass_outside_support() > kSupportMass) return kInf;
  double p = ev(alpha);
  if (p == kNegInf) return alpha < 1.0 ? kInf : kNegInf;
  return p / (alpha - 1.0);
}

double relative_entropy(const DensityOperator& rho0, const DensityOperator& rho1) {
  return PsiEvaluator(rho0, rho1).relative_entropy();
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("fidelity: dimension mismatch");
  ComplexMatrix prod = mpow(rho, 0.5).matrix() * mpow(sigma, 0.5).matrix();
  double f = trace_norm(prod);
  return std::clamp(f, 0.0, 1.0);
}

double chernoff_distance(const PsiCurve& curve) {
  if (!curve.covers(0.0, 1.0)) throw DomainError("chernoff_distance: curve does not cover [0,1]");
  Extremum e = minimize_bracketed([&](double s) { return curve.at(s); }, 0.0, 1.0, curve.s_grid);
  return -e.value;
}

double chernoff_argmin(const PsiCurve& curve) {
  if (!curve.covers(0.0, 1.0)) throw DomainError("chernoff_argmin: curve does not cover [0,1]");
  return minimize_bracketed([&](double s) { return curve.at(s); }, 0.0, 1.0, curve.s_grid).x;
}

double hoeffding_distance(const PsiCurve& curve, double r) {
  if (r < 0) throw DomainError("hoeffding_distance: r must be nonnegative");
  if (!curve.covers(0.0, 1.0)) throw DomainError("hoeffding_distance: curve does not cover [0,1)");
  const double psi1 = curve.at(1.0);
  if (psi1 == kNegInf) return kInf;
  // Numerator at t = 1 is -r - psi(1); positive means the ratio blows up.
  const double edge = -r - psi1;
  if (edge > 1e-12) return kInf;
  auto obj = [&](double t) {
    double p = curve.at(t);
    if (p == kNegInf) return kInf;
    return (-t * r - p) / (1.0 - t);
  };
  const double hi = 1.0 - 1e-7;
  Extremum e = maximize_bracketed(obj, 0.0, hi, curve.s_grid);
  double best = e.value;
  if (std::abs(edge) <= 1e-12) {
    // 0/0 at t = 1: the limit is r + psi'(1-).
    best = std::max(best, r + left_derivative([&](double s) { return curve.at(s); }, 1.0));
  }
  return best;
}

double lf_transform(const PsiCurve& curve, double a, double lo, double hi, double offset) {
  if (!curve.covers(lo, hi)) {
    throw DomainError("lf_transform: curve does not cover [" + fmt(lo) + ", " + fmt(hi) + "]");
  }
  auto obj = [&](double s) {
    double p = curve.at(s);
    if (p == kNegInf) return kInf;
    return a * (s - offset) - p;
  };
  return maximize_bracketed(obj, lo, hi, curve.s_grid).value;
}

double lf_phi(const PsiCurve& curve, double a) { return lf_transform(curve, a, 0.0, 1.0, 0.0); }

double lf_phi_tilde(const PsiCurve& curve, double a) {
  return lf_transform(curve, a, 1.0, 1.5, 1.0);
}

double hoeffding_via_lf(const PsiCurve& curve, double r) {
  const double psi1 = curve.at(1.0);
  if (psi1 == kNegInf || r < -psi1 - 1e-12) return kInf;
  // phi(a) - a = max_s a(s-1) - psi(s) is nonincreasing in a.
  auto excess = [&](double a) { return lf_transform(curve, a, 0.0, 1.0, 1.0) - r; };
  const double margin = 1e-13;
  double lo = -1.0;
  for (int i = 0; i < 200 && excess(lo) <= margin; ++i) lo *= 2.0;
  double hi = 1.0;
  for (int i = 0; i < 200 && excess(hi) > margin; ++i) hi *= 2.0;
  if (excess(hi) > margin) return kInf;
  if (excess(lo) <= margin) throw ConvergenceError("hoeffding_via_lf: no bracket");
  for (int i = 0; i < 300 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++i) {
    double mid = 0.5 * (lo + hi);
    if (excess(mid) > margin) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lf_phi(curve, 0.5 * (lo + hi));
}

bool support_invariant(const DensityOperator& rho, const GroupAction& g, double tol) {
  return is_invariant(support_projection(rho), g, tol);
}

CheckReport lieb_bound_check(const DensityOperator& rho0, const DensityOperator& rho1,
                             const GroupAction& action, int n, const std::vector<double>& s_grid) {
  CheckReport rep("lieb-bounds n=" + std::to_string(n));
  PsiEvaluator base(rho0, rho1);
  PsiEvaluator one(twirled_power(rho0, action, 1), twirled_power(rho1, action, 1));
  PsiEvaluator nth(twirled_power(rho0, action, n), twirled_power(rho1, action, n));
  const double dn = static_cast<double>(n);
  auto tol = [](double x) { return 1e-8 * std::max(1.0, std::isfinite(x) ? std::abs(x) : 1.0); };
  for (double s : s_grid) {
    if (s < 0.0 || s > 1.0) continue;
    double lo = dn * base(s), mid = nth(s), hi = dn * one(s);
    rep.expect_le(lo, mid, tol(mid), "n psi° <= psi_n at s=" + fmt(s));
    rep.expect_le(mid, hi, tol(mid), "psi_n <= n psi_1 at s=" + fmt(s));
  }
  if (support_invariant(rho1, action)) {
    for (double s : s_grid) {
      if (s < 1.0 || s > 2.0) continue;
      double lo = dn * one(s), mid = nth(s), hi = dn * base(s);
      rep.expect_le(lo, mid, tol(mid), "n psi_1 <= psi_n at s=" + fmt(s));
      rep.expect_le(mid, hi, tol(mid), "psi_n <= n psi° at s=" + fmt(s));
    }
  } else {
    rep.skip("[1,2] mirror: supp rho1 not invariant");
  }
  return rep;
}

DivergenceReport divergence_report(const DensityOperator& rho0, const DensityOperator& rho1,
                                   const std::vector<double>& alphas,
                                   const std::vector<double>& r_grid) {
  DivergenceReport rep;
  PsiEvaluator ev(rho0, rho1);
  for (double a : alphas) rep.renyi_alpha[a] = renyi(rho0, rho1, a);
  rep.relative_entropy = ev.relative_entropy();
  rep.fidelity = fidelity(rho0, rho1);
  PsiCurve c = psi_curve(rho0, rho1, default_s_grid());
  rep.chernoff = chernoff_distance(c);
  for (double r : r_grid) rep.hoeffding[r] = hoeffding_distance(c, r);
  return rep;
}

}  // namespace symtest
