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

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>

#include <Eigen/Dense>

namespace symtest {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Maximum operator dimension; SYMTEST_DIM_CAP overrides the default 4096.
std::size_t dim_cap();
void check_dim(double dim, const char* what);

struct Spectrum {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns
};

class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const ComplexMatrix& m, double herm_tol = 1e-10);

  static HermitianOperator identity(Index dim);
  static HermitianOperator zero(Index dim);

  const ComplexMatrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }
  double herm_tol() const { return herm_tol_; }
  double trace() const { return m_.trace().real(); }

 private:
  ComplexMatrix m_;
  double herm_tol_ = 1e-10;
};

// Positive semidefinite, unit trace. The spectrum is computed once on
// construction and shared between copies.
class DensityOperator {
 public:
  DensityOperator() = default;
  explicit DensityOperator(const HermitianOperator& op, double trace_tol = 1e-9);
  explicit DensityOperator(const ComplexMatrix& m, double trace_tol = 1e-9);

  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  Index dim() const { return op_.dim(); }
  double trace_tol() const { return trace_tol_; }
  const Spectrum& spectrum() const { return *spectrum_; }

 private:
  HermitianOperator op_;
  double trace_tol_ = 1e-9;
  std::shared_ptr<const Spectrum> spectrum_;
};

Spectrum eig(const HermitianOperator& h);
// Same, for a matrix the caller guarantees to be Hermitian.
Spectrum eig_hermitian(const ComplexMatrix& m);

// max(dim * eps * lambda_max, 1e-12)
double rank_tol(const RealVector& eigenvalues);

ComplexMatrix reconstruct(const Spectrum& sp, const std::function<double(double)>& f);

HermitianOperator mpow(const HermitianOperator& h, double s, double neg_tol = 1e-9);
HermitianOperator mpow(const DensityOperator& rho, double s);

HermitianOperator support_projection(const HermitianOperator& h);
HermitianOperator support_projection(const DensityOperator& rho);

double trace_norm(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_power(const ComplexMatrix& a, int n);

// Tr |A^s B^(1-s)|
double abs_power_trace(const DensityOperator& a, const DensityOperator& b, double s);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_defect(const ComplexMatrix& a);

}  // namespace symtest
