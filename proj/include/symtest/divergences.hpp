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

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symtest/groups.hpp"
#include "symtest/linalg.hpp"
#include "symtest/numeric.hpp"
#include "symtest/report.hpp"

namespace symtest {

// Traces at or below this are zero; psi is -inf there.
inline constexpr double kTraceFloor = 1e-300;

// Caches both spectra and the eigenvector overlaps |<v_i|w_j>|^2, so that
// Tr rho0^s rho1^(1-s) = sum_ij l_i^s m_j^(1-s) O_ij is cheap for many s.
class PsiEvaluator {
 public:
  PsiEvaluator(const DensityOperator& rho0, const DensityOperator& rho1);

  double operator()(double s) const;
  // Tr rho0 (I - supp rho1)
  double mass_outside_support() const { return outside_mass_; }
  // S(rho0 || rho1), +inf when the support condition fails.
  double relative_entropy() const;

 private:
  struct Term {
    double log_l0;
    double log_l1;
    double log_overlap;
  };
  std::vector<Term> terms_;
  std::vector<double> l0_;
  std::vector<double> log_l0_;
  double outside_mass_ = 0.0;
  double cross_ = 0.0;  // sum_ij l_i O_ij log m_j
};

double psi(const DensityOperator& rho0, const DensityOperator& rho1, double s);

struct PsiCurve {
  std::vector<double> s_grid;
  std::vector<double> values;
  int n = 1;  // 0 marks a closed-form (asymptotic) curve
  std::string label;
  std::function<double(double)> evaluator;  // optional exact evaluation off-grid

  double at(double s) const;
  bool covers(double lo, double hi) const;
  // Largest violation of discrete convexity, relative to the value scale.
  double convexity_defect() const;
  PsiCurve scaled(double factor, int new_n, const std::string& new_label) const;
};

PsiCurve make_curve(std::function<double(double)> f, const std::vector<double>& grid, int n,
                    const std::string& label);
PsiCurve psi_curve(const DensityOperator& rho0, const DensityOperator& rho1,
                   const std::vector<double>& grid, int n = 1,
                   const std::string& label = "psi");

double renyi(const DensityOperator& rho0, const DensityOperator& rho1, double alpha);
double relative_entropy(const DensityOperator& rho0, const DensityOperator& rho1);
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

double chernoff_distance(const PsiCurve& curve);
// Minimizer of psi on [0,1], ties toward smaller s.
double chernoff_argmin(const PsiCurve& curve);
double hoeffding_distance(const PsiCurve& curve, double r);

// max over s in [lo, hi] of a (s - offset) - psi(s).
double lf_transform(const PsiCurve& curve, double a, double lo, double hi, double offset = 0.0);
// phi(a) on [0,1]
double lf_phi(const PsiCurve& curve, double a);
// phi tilde(a) on [1, 3/2]
double lf_phi_tilde(const PsiCurve& curve, double a);
// sup { phi(a) : phi(a) - a > r }, by root finding in a. Independent of
// hoeffding_distance; the two must agree.
double hoeffding_via_lf(const PsiCurve& curve, double r);

// n psi° <= psi_n <= n psi_1 on [0,1]; mirrored on [1,2] when supp rho1 is invariant.
CheckReport lieb_bound_check(const DensityOperator& rho0, const DensityOperator& rho1,
                             const GroupAction& action, int n, const std::vector<double>& s_grid);

bool support_invariant(const DensityOperator& rho, const GroupAction& g, double tol = 1e-9);

struct DivergenceReport {
  std::map<double, double> renyi_alpha;
  double relative_entropy = 0.0;
  double fidelity = 1.0;
  double chernoff = 0.0;
  std::map<double, double> hoeffding;
};

DivergenceReport divergence_report(const DensityOperator& rho0, const DensityOperator& rho1,
                                   const std::vector<double>& alphas,
                                   const std::vector<double>& r_grid);

}  // namespace symtest
