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

#include <vector>

#include "symtest/divergences.hpp"
#include "symtest/linalg.hpp"
#include "symtest/report.hpp"

namespace symtest {

// 0 <= T <= I; eigenvalues within 1e-9 of [0,1] are clipped.
class TestOperator {
 public:
  explicit TestOperator(const HermitianOperator& op);
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

 private:
  HermitianOperator op_;
};

struct ErrorPair {
  double beta0;  // Tr rho0 (I - T)
  double beta1;  // Tr rho1 T
};

ErrorPair error_pair(const TestOperator& t, const DensityOperator& rho0n,
                     const DensityOperator& rho1n);

// {e^{-na} rho0n - rho1n > 0}
TestOperator np_test(const DensityOperator& rho0n, const DensityOperator& rho1n, double a, int n);

// (1 + e^{-na})/2 - ||e^{-na} rho0n - rho1n||_1 / 2, the minimum of
// e^{-na} beta0 + beta1 over all tests.
double p_min(const DensityOperator& rho0n, const DensityOperator& rho1n, double a, int n);

// Minimal error with equal priors: p_min(a = 0) / 2.
double p_err_symmetric(const DensityOperator& rho0n, const DensityOperator& rho1n);

struct AudenaertResult {
  double p_min;
  double upper;  // min_{s in [0,1]} e^{-nas} Tr rho0n^s rho1n^{1-s}
  double lower;  // e^{-na}/(1+e^{-na}) (Tr rho0n^{1/2} rho1n^{1/2})^2
  CheckReport report;
};

AudenaertResult audenaert_sandwich(const DensityOperator& rho0n, const DensityOperator& rho1n,
                                   double a, int n);

struct BetaEpsResult {
  double beta1;
  double beta0;           // equals eps up to rounding
  double threshold;       // t with boundary test {rho0 - t rho1 > 0}
  double mix;             // weight on the boundary part
  double deterministic;   // beta1 of an unrandomized feasible threshold test
  bool commuting;
};

// Optimal type II error subject to type I error <= eps. Construct once per
// pair and query several eps.
class BetaEpsSolver {
 public:
  BetaEpsSolver(const DensityOperator& rho0n, const DensityOperator& rho1n);
  BetaEpsResult solve(double eps) const;
  bool commuting() const { return commuting_; }

 private:
  struct Outcome {
    double p;
    double q;
  };
  BetaEpsResult solve_classical(double eps) const;
  BetaEpsResult solve_sweep(double eps) const;
  ErrorPair threshold_errors(double log_t) const;

  bool commuting_ = false;
  std::vector<Outcome> outcomes_;  // sorted by likelihood ratio, descending
  DensityOperator rho0_;
  DensityOperator rho1_;
};

double beta_eps(const DensityOperator& rho0n, const DensityOperator& rho1n, double eps);

// e^{-na}(1 - eps - e^{-phitilde_n(na)}), phitilde_n taken from the curve of psi_n.
double strong_converse_bound(const PsiCurve& psi_n, double eps, double a, int n);
double strong_converse_bound(const DensityOperator& rho0n, const DensityOperator& rho1n,
                             double eps, double a, int n);

// 21 points on [psi'-(1) - 0.5, psi'+(1) + 0.5] for a normalized curve.
std::vector<double> strong_converse_a_grid(const PsiCurve& normalized);

// (1 - sqrt(1 - F^2))/2 <= p_err_symmetric <= F/2
CheckReport fidelity_sandwich(const DensityOperator& rho0n, const DensityOperator& rho1n);

struct ErrorRow {
  int n;
  double a_or_eps;
  double beta0;
  double beta1;
  double bound_lo;
  double bound_hi;
};

}  // namespace symtest
