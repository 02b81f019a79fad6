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

#include "symtest/groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "symtest/error.hpp"
#include "symtest/random.hpp"

namespace symtest {

namespace {

bool is_diagonal(const ComplexMatrix& u) {
  for (Index j = 0; j < u.cols(); ++j)
    for (Index i = 0; i < u.rows(); ++i)
      if (i != j && u(i, j) != cplx(0.0, 0.0)) return false;
  return true;
}

// Deterministic pairwise-tree reduction.
ComplexMatrix tree_sum(std::vector<ComplexMatrix> terms) {
  while (terms.size() > 1) {
    std::vector<ComplexMatrix> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2) next.push_back(std::move(terms.back()));
    terms = std::move(next);
  }
  return terms.front();
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& x) {
  if (is_diagonal(u)) {
    ComplexMatrix out(x.rows(), x.cols());
    for (Index j = 0; j < x.cols(); ++j)
      for (Index i = 0; i < x.rows(); ++i) out(i, j) = u(i, i) * x(i, j) * std::conj(u(j, j));
    return out;
  }
  return u * x * u.adjoint();
}

}  // namespace

GroupAction GroupAction::finite(std::vector<ComplexMatrix> unitaries) {
  if (unitaries.empty()) throw DomainError("finite group: empty unitary list");
  const Index d = unitaries.front().rows();
  bool has_identity = false;
  for (std::size_t k = 0; k < unitaries.size(); ++k) {
    const auto& u = unitaries[k];
    if (u.rows() != d || u.cols() != d) {
      throw DimensionError("finite group: element " + std::to_string(k) + " is " +
                           std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                           ", expected " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (!u.allFinite()) throw DomainError("finite group: non-finite entry");
    double unit_err = (u.adjoint() * u - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (unit_err > 1e-9) {
      throw DomainError("finite group: element " + std::to_string(k) +
                        " is not unitary (defect " + std::to_string(unit_err) + ")");
    }
    if ((u - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-9) has_identity = true;
  }
  if (!has_identity) throw DomainError("finite group: identity element missing");
  for (std::size_t a = 0; a < unitaries.size(); ++a) {
    for (std::size_t b = 0; b < unitaries.size(); ++b) {
      ComplexMatrix p = unitaries[a] * unitaries[b];
      bool found = false;
      for (const auto& c : unitaries) {
        if ((p - c).cwiseAbs().maxCoeff() <= 1e-8) {
          found = true;
          break;
        }
      }
      if (!found) {
        throw DomainError("finite group: product of elements " + std::to_string(a) + " and " +
                          std::to_string(b) + " is not in the list (not closed)");
      }
    }
  }
  GroupAction g;
  g.kind_ = GroupKind::FiniteUnitaryList;
  g.dim_ = d;
  g.unitaries_ = std::move(unitaries);
  return g;
}

GroupAction GroupAction::torus(std::vector<long> weights) {
  if (weights.empty()) throw DomainError("torus action: empty weight vector");
  GroupAction g;
  g.kind_ = GroupKind::TorusWeights;
  g.dim_ = static_cast<Index>(weights.size());
  g.weights_ = std::move(weights);
  return g;
}

GroupAction GroupAction::trivial(Index dim) {
  return finite({ComplexMatrix::Identity(dim, dim)});
}

std::vector<ComplexMatrix> GroupAction::sample_unitaries() const {
  if (kind_ == GroupKind::FiniteUnitaryList) return unitaries_;
  std::vector<ComplexMatrix> out;
  for (double theta : {0.7, 1.9, 2.3}) {
    ComplexMatrix u = ComplexMatrix::Zero(dim_, dim_);
    for (Index i = 0; i < dim_; ++i) u(i, i) = std::polar(1.0, theta * weights_[i]);
    out.push_back(u);
  }
  return out;
}

GroupAction tensor_power(const GroupAction& g, int n) {
  if (n < 1) throw DomainError("tensor_power: n must be positive");
  check_dim(std::pow(static_cast<double>(g.dim()), n), "tensor_power");
  if (n == 1) return g;
  GroupAction out;
  out.kind_ = g.kind_;
  out.dim_ = 1;
  for (int i = 0; i < n; ++i) out.dim_ *= g.dim();
  if (g.kind() == GroupKind::TorusWeights) {
    // Index a*d + b: the first factor is the most significant digit.
    std::vector<long> w{0};
    for (int k = 0; k < n; ++k) {
      std::vector<long> next;
      next.reserve(w.size() * g.weights().size());
      for (long a : w)
        for (long b : g.weights()) next.push_back(a + b);
      w = std::move(next);
    }
    out.weights_ = std::move(w);
  } else {
    for (const auto& u : g.unitaries()) out.unitaries_.push_back(kron_power(u, n));
  }
  return out;
}

GroupAction product_action(const GroupAction& a, const GroupAction& b) {
  check_dim(static_cast<double>(a.dim()) * static_cast<double>(b.dim()), "product_action");
  GroupAction out;
  out.dim_ = a.dim() * b.dim();
  if (a.kind() == GroupKind::TorusWeights && b.kind() == GroupKind::TorusWeights) {
    out.kind_ = GroupKind::TorusWeights;
    auto [lo, hi] = std::minmax_element(b.weights().begin(), b.weights().end());
    long span = *hi - *lo + 1;
    for (long wa : a.weights())
      for (long wb : b.weights()) out.weights_.push_back(wa * span + (wb - *lo));
    return out;
  }
  auto as_list = [](const GroupAction& g) {
    if (g.kind() == GroupKind::FiniteUnitaryList) return g.unitaries();
    throw DomainError("product_action: mixed torus and finite actions are not supported");
  };
  out.kind_ = GroupKind::FiniteUnitaryList;
  for (const auto& u : as_list(a))
    for (const auto& v : as_list(b)) out.unitaries_.push_back(kron(u, v));
  return out;
}

ComplexMatrix twirl(const ComplexMatrix& x, const GroupAction& g) {
  if (x.rows() != g.dim() || x.cols() != g.dim()) {
    throw DimensionError("twirl: operator dimension " + std::to_string(x.rows()) +
                         " does not match action dimension " + std::to_string(g.dim()));
  }
  if (g.kind() == GroupKind::TorusWeights) {
    ComplexMatrix out = x;
    const auto& w = g.weights();
    for (Index j = 0; j < x.cols(); ++j)
      for (Index i = 0; i < x.rows(); ++i)
        if (w[i] != w[j]) out(i, j) = 0.0;
    return out;
  }
  std::vector<ComplexMatrix> terms;
  terms.reserve(g.order());
  for (const auto& u : g.unitaries()) terms.push_back(conjugate_by(u, x));
  return tree_sum(std::move(terms)) / static_cast<double>(g.order());
}

HermitianOperator twirl(const HermitianOperator& x, const GroupAction& g) {
  ComplexMatrix t = twirl(x.matrix(), g);
  return HermitianOperator((t + t.adjoint()) * 0.5);
}

DensityOperator twirled_power(const DensityOperator& rho, const GroupAction& g, int n) {
  GroupAction gn = tensor_power(g, n);
  ComplexMatrix p = kron_power(rho.matrix(), n);
  return DensityOperator(twirl(HermitianOperator((p + p.adjoint()) * 0.5), gn));
}

double commutator_defect(const ComplexMatrix& x, const GroupAction& g) {
  double worst = 0.0;
  for (const auto& u : g.sample_unitaries()) worst = std::max(worst, (x * u - u * x).norm());
  return worst;
}

bool is_invariant(const HermitianOperator& x, const GroupAction& g, double tol) {
  return max_abs_diff(twirl(x.matrix(), g), x.matrix()) <= tol;
}

Index BlockStructure::sum_irrep_dims() const {
  Index s = 0;
  for (const auto& b : blocks) s += b.irrep_dim;
  return s;
}

namespace {

// Consecutive eigenvalues closer than tol belong to one cluster.
std::vector<std::pair<Index, Index>> clusters(const RealVector& vals, double tol) {
  std::vector<std::pair<Index, Index>> out;  // [begin, end)
  Index start = 0;
  for (Index i = 1; i <= vals.size(); ++i) {
    if (i == vals.size() || vals(i) - vals(i - 1) > tol) {
      out.emplace_back(start, i);
      start = i;
    }
  }
  return out;
}

ComplexMatrix random_group_combination(const GroupAction& g, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix k = ComplexMatrix::Zero(g.dim(), g.dim());
  for (const auto& u : g.unitaries()) {
    double re = normal(rng);
    double im = normal(rng);
    k += cplx(re, im) * u;
  }
  return (k + k.adjoint()) * 0.5;
}

BlockStructure finite_blocks(const GroupAction& g, std::uint64_t seed) {
  Rng rng(seed);
  const Index dim = g.dim();
  // A generic Hermitian element of the center separates the isotypic blocks.
  ComplexMatrix z = twirl(random_group_combination(g, rng), g);
  z = (z + z.adjoint()) * 0.5;
  Spectrum zs = eig_hermitian(z);
  double zscale = std::max(1.0, zs.eigenvalues.cwiseAbs().maxCoeff());
  // A generic element of the fixed-point algebra.
  ComplexMatrix x = twirl(random_hermitian(dim, rng).matrix(), g);
  x = (x + x.adjoint()) * 0.5;
  double xscale = std::max(1.0, x.cwiseAbs().maxCoeff());

  BlockStructure bs;
  bs.total_dim = dim;
  for (auto [b, e] : clusters(zs.eigenvalues, 1e-8 * zscale)) {
    ComplexMatrix q = zs.eigenvectors.middleCols(b, e - b);
    ComplexMatrix y = q.adjoint() * x * q;
    Spectrum ys = eig_hermitian((y + y.adjoint()) * 0.5);
    auto inner = clusters(ys.eigenvalues, 1e-8 * xscale * static_cast<double>(dim));
    const Index size = e - b;
    const Index m = static_cast<Index>(inner.size());
    if (size % m != 0) {
      throw ConvergenceError("block_structure: block of size " + std::to_string(size) +
                             " splits into " + std::to_string(m) +
                             " eigenvalue clusters of unequal multiplicity");
    }
    const Index d = size / m;
    for (auto [ib, ie] : inner) {
      if (ie - ib != d) {
        throw ConvergenceError("block_structure: irregular multiplicity " +
                               std::to_string(ie - ib) + " in block of size " +
                               std::to_string(size));
      }
    }
    // m^2 = (1/|G|) sum_g |Tr u_g restricted to the block|^2
    double norm2 = 0.0;
    for (const auto& u : g.unitaries()) norm2 += std::norm((q.adjoint() * u * q).trace());
    norm2 /= static_cast<double>(g.order());
    if (std::abs(norm2 - static_cast<double>(m * m)) > 1e-6 * static_cast<double>(m * m)) {
      throw ConvergenceError("block_structure: character norm " + std::to_string(norm2) +
                             " disagrees with multiplicity " + std::to_string(m) +
                             " (residual " + std::to_string(std::abs(norm2 - m * m)) + ")");
    }
    bs.blocks.push_back({m, d, q});
  }
  // Canonical order independent of the random draw.
  auto key = [](const Block& blk) {
    RealVector diag = blk.basis.rowwise().squaredNorm();
    double first = 0.0;
    for (Index i = 0; i < diag.size(); ++i)
      if (diag(i) > 1e-6) {
        first = static_cast<double>(i) + 1.0 - diag(i);
        break;
      }
    return std::make_tuple(first, blk.irrep_dim, blk.multiplicity);
  };
  std::stable_sort(bs.blocks.begin(), bs.blocks.end(),
                   [&](const Block& a, const Block& b) { return key(a) < key(b); });
  return bs;
}

std::vector<std::pair<Index, Index>> signature(const BlockStructure& bs) {
  std::vector<std::pair<Index, Index>> s;
  for (const auto& b : bs.blocks) s.emplace_back(b.multiplicity, b.irrep_dim);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

BlockStructure block_structure(const GroupAction& gn) {
  BlockStructure bs;
  bs.total_dim = gn.dim();
  if (gn.kind() == GroupKind::TorusWeights) {
    std::map<long, std::vector<Index>> by_weight;
    for (Index i = 0; i < gn.dim(); ++i) by_weight[gn.weights()[i]].push_back(i);
    for (const auto& [w, idx] : by_weight) {
      ComplexMatrix basis = ComplexMatrix::Zero(gn.dim(), static_cast<Index>(idx.size()));
      for (std::size_t c = 0; c < idx.size(); ++c) basis(idx[c], static_cast<Index>(c)) = 1.0;
      bs.blocks.push_back({static_cast<Index>(idx.size()), 1, basis});
    }
  } else {
    bs = finite_blocks(gn, 0x5EED);
    BlockStructure again = finite_blocks(gn, 0x5EED + 1);
    if (signature(bs) != signature(again)) {
      throw ConvergenceError("block_structure: extraction disagrees between random seeds");
    }
  }
  Index total = 0;
  for (const auto& b : bs.blocks) total += b.multiplicity * b.irrep_dim;
  if (total != gn.dim()) {
    throw ConvergenceError("block_structure: sum m_i d_i = " + std::to_string(total) +
                           " but dimension is " + std::to_string(gn.dim()));
  }
  return bs;
}

BlockStructure block_structure(const GroupAction& g, int n) {
  return block_structure(tensor_power(g, n));
}

std::vector<double> dim_growth(const GroupAction& g, int n_max) {
  std::vector<double> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(std::log(static_cast<double>(block_structure(g, n).sum_irrep_dims())) / n);
  }
  return out;
}

ComplexMatrix weyl_operator(Index d, Index k1, Index k2) {
  // W_k = conj(w)^{k1 k2 / 2} V^{k1} U^{k2}, U e_j = e_{j+1}, V e_j = w^j e_j.
  const double two_pi = 2.0 * std::numbers::pi;
  ComplexMatrix w = ComplexMatrix::Zero(d, d);
  cplx global = std::polar(1.0, -two_pi * static_cast<double>(k1 * k2) / (2.0 * d));
  for (Index j = 0; j < d; ++j) {
    Index t = (j + k2) % d;
    w(t, j) = global * std::polar(1.0, two_pi * static_cast<double>(k1 * t) / d);
  }
  return w;
}

HermitianOperator weyl_twirl(const HermitianOperator& a, Index m, Index d) {
  if (m < 1 || d < 1 || a.dim() != m * d) {
    throw DimensionError("weyl_twirl: dimension " + std::to_string(a.dim()) +
                         " does not factor as m*d = " + std::to_string(m) + "*" +
                         std::to_string(d));
  }
  std::vector<ComplexMatrix> terms;
  const ComplexMatrix im = ComplexMatrix::Identity(m, m);
  for (Index k1 = 0; k1 < d; ++k1)
    for (Index k2 = 0; k2 < d; ++k2) {
      ComplexMatrix u = kron(im, weyl_operator(d, k1, k2));
      terms.push_back(u * a.matrix() * u.adjoint());
    }
  ComplexMatrix t = tree_sum(std::move(terms)) / static_cast<double>(d * d);
  return HermitianOperator((t + t.adjoint()) * 0.5);
}

std::vector<HermitianOperator> spectral_projections(const HermitianOperator& h, double rel_tol) {
  Spectrum sp = eig(h);
  double scale = std::max(1e-300, sp.eigenvalues.cwiseAbs().maxCoeff());
  std::vector<HermitianOperator> out;
  Index start = 0;
  const Index n = sp.eigenvalues.size();
  for (Index i = 1; i <= n; ++i) {
    if (i == n || sp.eigenvalues(i) - sp.eigenvalues(i - 1) >
                      rel_tol * std::max(std::abs(sp.eigenvalues(i)), 1e-3 * scale)) {
      ComplexMatrix v = sp.eigenvectors.middleCols(start, i - start);
      ComplexMatrix p = v * v.adjoint();
      out.emplace_back((p + p.adjoint()) * 0.5);
      start = i;
    }
  }
  return out;
}

HermitianOperator pinching_map(const HermitianOperator& x, const GroupAction& g,
                               const std::vector<HermitianOperator>& projections) {
  const Index dim = x.dim();
  if (projections.empty()) throw DomainError("pinching_map: no projections");
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < projections.size(); ++i) {
    const auto& p = projections[i].matrix();
    if (p.rows() != dim) throw DimensionError("pinching_map: projection dimension mismatch");
    if ((p * p - p).cwiseAbs().maxCoeff() > 1e-8) {
      throw DomainError("pinching_map: operator " + std::to_string(i) + " is not a projection");
    }
    for (std::size_t j = 0; j < i; ++j) {
      double overlap = (p * projections[j].matrix()).cwiseAbs().maxCoeff();
      if (overlap > 1e-8) {
        throw DomainError("pinching_map: projections " + std::to_string(j) + " and " +
                          std::to_string(i) + " are not orthogonal (" +
                          std::to_string(overlap) + ")");
      }
    }
    sum += p;
  }
  if ((sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-8) {
    throw DomainError("pinching_map: projections do not sum to the identity");
  }
  ComplexMatrix t = twirl(x.matrix(), g);
  std::vector<ComplexMatrix> terms;
  for (const auto& p : projections) terms.push_back(p.matrix() * t * p.matrix());
  ComplexMatrix out = tree_sum(std::move(terms));
  return HermitianOperator((out + out.adjoint()) * 0.5);
}

}  // namespace symtest
