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

#include <cstdint>
#include <vector>

#include "symtest/linalg.hpp"

namespace symtest {

enum class GroupKind { FiniteUnitaryList, TorusWeights };

class GroupAction {
 public:
  GroupAction() = default;  // empty; use the factories
  // Validates identity, unitarity (1e-9) and closure (1e-8).
  static GroupAction finite(std::vector<ComplexMatrix> unitaries);
  // u_zeta = diag(zeta^w_1, ..., zeta^w_d)
  static GroupAction torus(std::vector<long> weights);
  static GroupAction trivial(Index dim);

  GroupKind kind() const { return kind_; }
  Index dim() const { return dim_; }
  const std::vector<ComplexMatrix>& unitaries() const { return unitaries_; }
  const std::vector<long>& weights() const { return weights_; }
  std::size_t order() const { return unitaries_.size(); }

  // Finite list: every element. Torus: u_zeta at a few generic phases.
  std::vector<ComplexMatrix> sample_unitaries() const;

 private:
  friend GroupAction tensor_power(const GroupAction& g, int n);
  friend GroupAction product_action(const GroupAction& a, const GroupAction& b);

  GroupKind kind_ = GroupKind::FiniteUnitaryList;
  Index dim_ = 0;
  std::vector<ComplexMatrix> unitaries_;
  std::vector<long> weights_;
};

GroupAction tensor_power(const GroupAction& g, int n);

// Action of G_a x G_b on the tensor product space. For two tori the result
// is a single torus with the same fixed-point algebra (pair weights packed
// into one integer).
GroupAction product_action(const GroupAction& a, const GroupAction& b);

ComplexMatrix twirl(const ComplexMatrix& x, const GroupAction& g);
HermitianOperator twirl(const HermitianOperator& x, const GroupAction& g);

// E(rho^{xn}) for the n-fold action.
DensityOperator twirled_power(const DensityOperator& rho, const GroupAction& g, int n);

bool is_invariant(const HermitianOperator& x, const GroupAction& g, double tol = 1e-9);
double commutator_defect(const ComplexMatrix& x, const GroupAction& g);

struct Block {
  Index multiplicity;
  Index irrep_dim;
  ComplexMatrix basis;  // isometry onto the isotypic block
};

struct BlockStructure {
  std::vector<Block> blocks;
  Index total_dim = 0;
  Index sum_irrep_dims() const;
};

BlockStructure block_structure(const GroupAction& g, int n);
BlockStructure block_structure(const GroupAction& g_n);

// (1/n) log sum_i d_i^{(n)} for n = 1..n_max
std::vector<double> dim_growth(const GroupAction& g, int n_max);

ComplexMatrix weyl_operator(Index d, Index k1, Index k2);
HermitianOperator weyl_twirl(const HermitianOperator& a, Index m, Index d);

// Eigenprojections of h, eigenvalues grouped at relative tolerance rel_tol.
std::vector<HermitianOperator> spectral_projections(const HermitianOperator& h,
                                                    double rel_tol = 1e-9);

// Twirl, then cut to the given mutually orthogonal projections summing to I.
HermitianOperator pinching_map(const HermitianOperator& x, const GroupAction& g,
                               const std::vector<HermitianOperator>& projections);

}  // namespace symtest
