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

#include "symtest/random.hpp"

#include <Eigen/QR>

#include "symtest/error.hpp"

namespace symtest {

ComplexMatrix random_ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      double re = normal(rng);
      double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  return g;
}

ComplexMatrix random_unitary(Index dim, Rng& rng) {
  ComplexMatrix g = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Phase fix so the distribution is Haar.
  for (Index i = 0; i < dim; ++i) {
    cplx d = r(i, i);
    double a = std::abs(d);
    if (a > 0) q.col(i) *= d / a;
  }
  return q;
}

HermitianOperator random_hermitian(Index dim, Rng& rng) {
  ComplexMatrix g = random_ginibre(dim, dim, rng);
  return HermitianOperator((g + g.adjoint()) * 0.5);
}

DensityOperator random_density(Index dim, Rng& rng, Index rank) {
  if (rank < 0 || rank > dim) throw DomainError("random_density: rank out of range");
  if (rank == 0) rank = dim;
  ComplexMatrix g = random_ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(ComplexMatrix((rho + rho.adjoint()) * 0.5));
}

HermitianOperator random_test_operator(Index dim, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  ComplexMatrix u = random_unitary(dim, rng);
  RealVector lam(dim);
  for (Index i = 0; i < dim; ++i) lam(i) = unif(rng);
  ComplexMatrix t = u * lam.cast<cplx>().asDiagonal() * u.adjoint();
  return HermitianOperator((t + t.adjoint()) * 0.5);
}

}  // namespace symtest
