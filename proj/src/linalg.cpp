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

#include "symtest/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "symtest/error.hpp"

namespace symtest {

std::size_t dim_cap() {
  if (const char* env = std::getenv("SYMTEST_DIM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

void check_dim(double dim, const char* what) {
  if (dim > static_cast<double>(dim_cap())) {
    throw ResourceError(std::string(what) + ": dimension " +
                        std::to_string(static_cast<long long>(dim)) +
                        " exceeds cap " + std::to_string(dim_cap()) +
                        " (set SYMTEST_DIM_CAP to raise it)");
  }
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m, double herm_tol)
    : herm_tol_(herm_tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("HermitianOperator: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", not square");
  }
  if (!m.allFinite()) throw DomainError("HermitianOperator: non-finite entry");
  double defect = hermiticity_defect(m);
  if (defect > herm_tol) {
    throw DomainError("HermitianOperator: max |A_ij - conj(A_ji)| = " + std::to_string(defect) +
                      " exceeds herm_tol");
  }
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianOperator HermitianOperator::identity(Index dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(Index dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

namespace {

Spectrum dense_eig(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eig: Hermitian eigensolver did not converge for dimension " +
                           std::to_string(m.rows()));
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(Index n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Index find(Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Spectrum eig_hermitian(const ComplexMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return {RealVector(0), ComplexMatrix(0, 0)};

  // Split along the exact sparsity pattern; twirled operators are block diagonal.
  UnionFind uf(n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = j + 1; i < n; ++i) {
      if (m(i, j) != cplx(0.0, 0.0)) uf.unite(i, j);
    }
  }
  std::vector<std::vector<Index>> comps;
  std::vector<Index> comp_of(n, -1);
  for (Index i = 0; i < n; ++i) {
    Index r = uf.find(i);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<Index>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(i);
  }
  if (comps.size() == 1) return dense_eig(m);

  RealVector vals(n);
  ComplexMatrix vecs = ComplexMatrix::Zero(n, n);
  Index col = 0;
  for (const auto& c : comps) {
    const Index k = static_cast<Index>(c.size());
    if (k == 1) {
      vals(col) = m(c[0], c[0]).real();
      vecs(c[0], col) = 1.0;
      ++col;
      continue;
    }
    ComplexMatrix sub(k, k);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) sub(a, b) = m(c[a], c[b]);
    Spectrum sp = dense_eig(sub);
    for (Index a = 0; a < k; ++a) {
      vals(col) = sp.eigenvalues(a);
      for (Index b = 0; b < k; ++b) vecs(c[b], col) = sp.eigenvectors(b, a);
      ++col;
    }
  }
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return vals(a) < vals(b); });
  Spectrum out{RealVector(n), ComplexMatrix(n, n)};
  for (Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = vals(order[i]);
    out.eigenvectors.col(i) = vecs.col(order[i]);
  }
  return out;
}

Spectrum eig(const HermitianOperator& h) { return eig_hermitian(h.matrix()); }

double rank_tol(const RealVector& eigenvalues) {
  if (eigenvalues.size() == 0) return 1e-12;
  double lmax = eigenvalues.cwiseAbs().maxCoeff();
  return std::max(static_cast<double>(eigenvalues.size()) *
                      std::numeric_limits<double>::epsilon() * lmax,
                  1e-12);
}

ComplexMatrix reconstruct(const Spectrum& sp, const std::function<double(double)>& f) {
  const Index n = sp.eigenvalues.size();
  ComplexMatrix scaled = sp.eigenvectors;
  for (Index i = 0; i < n; ++i) scaled.col(i) *= f(sp.eigenvalues(i));
  return scaled * sp.eigenvectors.adjoint();
}

DensityOperator::DensityOperator(const ComplexMatrix& m, double trace_tol)
    : DensityOperator(HermitianOperator(m), trace_tol) {}

DensityOperator::DensityOperator(const HermitianOperator& op, double trace_tol)
    : trace_tol_(trace_tol) {
  Spectrum sp = eig(op);
  bool clipped = false;
  for (Index i = 0; i < sp.eigenvalues.size(); ++i) {
    double v = sp.eigenvalues(i);
    if (v < -trace_tol) {
      throw DomainError("DensityOperator: eigenvalue " + std::to_string(v) +
                        " is negative beyond tolerance");
    }
    if (v < 0.0) {
      sp.eigenvalues(i) = 0.0;
      clipped = true;
    }
  }
  double tr = op.trace();
  if (std::abs(tr - 1.0) > trace_tol) {
    throw DomainError("DensityOperator: trace " + std::to_string(tr) + " differs from 1");
  }
  double tr_sp = sp.eigenvalues.sum();
  if (tr_sp <= 0.0) throw DomainError("DensityOperator: zero trace after clipping");
  sp.eigenvalues /= tr_sp;
  if (clipped) {
    op_ = HermitianOperator(reconstruct(sp, [](double x) { return x; }), 1e-8);
  } else if (tr_sp != 1.0) {
    op_ = HermitianOperator(op.matrix() / tr_sp, op.herm_tol());
  } else {
    op_ = op;
  }
  spectrum_ = std::make_shared<const Spectrum>(std::move(sp));
}

namespace {

HermitianOperator mpow_spectrum(const Spectrum& sp, double s, double neg_tol) {
  const double tol = rank_tol(sp.eigenvalues);
  for (Index i = 0; i < sp.eigenvalues.size(); ++i) {
    if (sp.eigenvalues(i) < -neg_tol) {
      throw DomainError("mpow: eigenvalue " + std::to_string(sp.eigenvalues(i)) +
                        " is negative beyond tolerance");
    }
  }
  // 0^s = 0 for every real s, including s <= 0.
  ComplexMatrix m = reconstruct(sp, [&](double x) { return x > tol ? std::pow(x, s) : 0.0; });
  return HermitianOperator((m + m.adjoint()) * 0.5);
}

}  // namespace

HermitianOperator mpow(const HermitianOperator& h, double s, double neg_tol) {
  return mpow_spectrum(eig(h), s, neg_tol);
}

HermitianOperator mpow(const DensityOperator& rho, double s) {
  return mpow_spectrum(rho.spectrum(), s, rho.trace_tol());
}

HermitianOperator support_projection(const HermitianOperator& h) {
  Spectrum sp = eig(h);
  const double tol = rank_tol(sp.eigenvalues);
  ComplexMatrix p = reconstruct(sp, [&](double x) { return x > tol ? 1.0 : 0.0; });
  return HermitianOperator((p + p.adjoint()) * 0.5);
}

HermitianOperator support_projection(const DensityOperator& rho) {
  const Spectrum& sp = rho.spectrum();
  const double tol = rank_tol(sp.eigenvalues);
  ComplexMatrix p = reconstruct(sp, [&](double x) { return x > tol ? 1.0 : 0.0; });
  return HermitianOperator((p + p.adjoint()) * 0.5);
}

double trace_norm(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("trace_norm: matrix not square");
  if (a.size() == 0) return 0.0;
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (hermiticity_defect(a) <= 1e-13 * scale) {
    Spectrum sp = eig_hermitian((a + a.adjoint()) * 0.5);
    return sp.eigenvalues.cwiseAbs().sum();
  }
  Eigen::BDCSVD<ComplexMatrix> svd(a);
  return svd.singularValues().sum();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw DimensionError("kron: operands must be square");
  }
  check_dim(static_cast<double>(a.rows()) * static_cast<double>(b.rows()), "kron");
  ComplexMatrix out = Eigen::kroneckerProduct(a, b);
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& a, int n) {
  if (n < 1) throw DomainError("kron_power: n must be positive");
  check_dim(std::pow(static_cast<double>(a.rows()), n), "kron_power");
  ComplexMatrix out = a;
  for (int i = 1; i < n; ++i) out = kron(out, a);
  return out;
}

double abs_power_trace(const DensityOperator& a, const DensityOperator& b, double s) {
  if (a.dim() != b.dim()) throw DimensionError("abs_power_trace: dimension mismatch");
  ComplexMatrix prod = mpow(a, s).matrix() * mpow(b, 1.0 - s).matrix();
  return trace_norm(prod);
}

}  // namespace symtest
