// SPDX-License-Identifier: Apache-2.0
#include "sdfp/constraint_map.hpp"

#include <cmath>
#include <utility>

namespace sdfp {

ConstraintMap::ConstraintMap(BlockStructure structure, std::vector<BlockVec> rows)
    : structure_(std::move(structure)), rows_(std::move(rows)) {
  for (const BlockVec& row : rows_) {
    if (row.structure() != structure_) {
      throw StructureMismatch("constraint row structure differs from the map's");
    }
  }
}

double ConstraintMap::row_norm_max() const {
  double m = 0.0;
  for (const BlockVec& row : rows_) m = std::max(m, row.norm());
  return m;
}

Eigen::VectorXd apply_map(const ConstraintMap& map, const BlockVec& x) {
  if (x.structure() != map.structure()) {
    throw StructureMismatch("apply_map: structure mismatch");
  }
  Eigen::VectorXd out(map.num_rows());
  for (int i = 0; i < map.num_rows(); ++i) out[i] = inner(map.row(i), x);
  return out;
}

KernelProjector::KernelProjector(ConstraintMap map) : map_(std::move(map)) {
  const int m = map_.num_rows();
  if (m == 0) return;  // identity projector

  Eigen::MatrixXd gram(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      gram(i, j) = gram(j, i) = inner(map_.row(i), map_.row(j));
    }
  }

  // Outer-product Cholesky with diagonal pivoting. Stops once the largest
  // remaining diagonal falls below the drop tolerance; the rows behind the
  // dropped pivots are numerically dependent on the retained ones.
  Eigen::VectorXd diag = gram.diagonal();
  drop_tolerance_ = 1e-12 * std::max(diag.maxCoeff(), 0.0);
  std::vector<int> piv(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) piv[static_cast<std::size_t>(i)] = i;

  chol_ = Eigen::MatrixXd::Zero(m, m);
  int k = 0;
  for (; k < m; ++k) {
    int arg = k;
    for (int j = k + 1; j < m; ++j) {
      if (diag[piv[static_cast<std::size_t>(j)]] > diag[piv[static_cast<std::size_t>(arg)]]) arg = j;
    }
    std::swap(piv[static_cast<std::size_t>(k)], piv[static_cast<std::size_t>(arg)]);
    chol_.row(k).head(k).swap(chol_.row(arg).head(k));
    const int p = piv[static_cast<std::size_t>(k)];
    if (diag[p] <= drop_tolerance_) break;

    chol_(k, k) = std::sqrt(diag[p]);
    for (int r = k + 1; r < m; ++r) {
      const int q = piv[static_cast<std::size_t>(r)];
      double v = gram(q, p);
      for (int t = 0; t < k; ++t) v -= chol_(r, t) * chol_(k, t);
      chol_(r, k) = v / chol_(k, k);
      diag[q] -= chol_(r, k) * chol_(r, k);
    }
  }
  rank_ = k;
  retained_.assign(piv.begin(), piv.begin() + rank_);
}

Eigen::VectorXd KernelProjector::gram_solve(const Eigen::VectorXd& rhs) const {
  const int m = map_.num_rows();
  if (rhs.size() != m) {
    throw DimensionMismatch("gram_solve: rhs length differs from row count");
  }
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(m);
  if (rank_ == 0) return coeffs;

  Eigen::VectorXd z(rank_);
  for (int i = 0; i < rank_; ++i) {
    double v = rhs[retained_[static_cast<std::size_t>(i)]];
    for (int t = 0; t < i; ++t) v -= chol_(i, t) * z[t];
    z[i] = v / chol_(i, i);
  }
  for (int i = rank_ - 1; i >= 0; --i) {
    double v = z[i];
    for (int t = i + 1; t < rank_; ++t) v -= chol_(t, i) * z[t];
    z[i] = v / chol_(i, i);
  }
  for (int i = 0; i < rank_; ++i) coeffs[retained_[static_cast<std::size_t>(i)]] = z[i];
  return coeffs;
}

KernelProjector build_projector(const ConstraintMap& map) { return KernelProjector(map); }

BlockVec project(const KernelProjector& projector, const BlockVec& x) {
  const ConstraintMap& map = projector.source();
  if (x.structure() != map.structure()) {
    throw StructureMismatch("project: structure mismatch");
  }
  if (projector.rank() == 0) return x;

  const Eigen::VectorXd coeffs = projector.gram_solve(apply_map(map, x));
  BlockVec out = x;
  for (int i : projector.retained()) {
    out.add_scaled(-coeffs[i], map.row(i));
  }
  return out;
}

ConstraintMap rescale_map(const ConstraintMap& map, const BlockVec& inv_sqrt) {
  if (inv_sqrt.structure() != map.structure()) {
    throw StructureMismatch("rescale_map: structure mismatch");
  }
  std::vector<BlockVec> rows;
  rows.reserve(static_cast<std::size_t>(map.num_rows()));
  for (int i = 0; i < map.num_rows(); ++i) {
    rows.push_back(congruence(inv_sqrt, map.row(i)));
  }
  return ConstraintMap(map.structure(), std::move(rows));
}

}  // namespace sdfp
