// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sdfp/block_vec.hpp"

namespace sdfp {

/// The linear operator A as m constraint rows A_1..A_m with
/// (Ax)_i = <A_i, x>. All rows share one block structure.
class ConstraintMap {
 public:
  ConstraintMap(BlockStructure structure, std::vector<BlockVec> rows);

  const BlockStructure& structure() const { return structure_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const BlockVec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  const std::vector<BlockVec>& rows() const { return rows_; }

  /// max_i ||A_i||_F; the scale used in residual tolerances.
  double row_norm_max() const;

 private:
  BlockStructure structure_;
  std::vector<BlockVec> rows_;
};

/// (Ax)_i = <A_i, x>.
Eigen::VectorXd apply_map(const ConstraintMap& map, const BlockVec& x);

/// Orthogonal projector onto ker A, factorized through the m x m Gram matrix
/// G_ij = <A_i, A_j>. The Gram matrix is decomposed by pivoted Cholesky;
/// pivots below drop_tolerance are excluded, so redundant rows are harmless.
class KernelProjector {
 public:
  explicit KernelProjector(ConstraintMap map);

  const ConstraintMap& source() const { return map_; }
  int rank() const { return rank_; }
  /// Original row indices kept by the pivoted factorization, pivot order.
  const std::vector<int>& retained() const { return retained_; }
  double drop_tolerance() const { return drop_tolerance_; }

  /// Solves G c = rhs on the retained pivots; dropped coordinates are zero.
  Eigen::VectorXd gram_solve(const Eigen::VectorXd& rhs) const;

 private:
  ConstraintMap map_;
  Eigen::MatrixXd chol_;        // lower triangular, pivot order, rank x rank used
  std::vector<int> retained_;
  int rank_ = 0;
  double drop_tolerance_ = 0.0;
};

KernelProjector build_projector(const ConstraintMap& map);

/// P x = x - sum_i c_i A_i with G c = A x. Idempotent and self-adjoint.
BlockVec project(const KernelProjector& projector, const BlockVec& x);

/// Rows conjugated by a symmetric factor: A'_i = S A_i S with S = inv_sqrt
/// blockwise. With S = (e+y)^{-1/2} this realizes A' = A o L_{e+y}^{-1}.
ConstraintMap rescale_map(const ConstraintMap& map, const BlockVec& inv_sqrt);

}  // namespace sdfp
