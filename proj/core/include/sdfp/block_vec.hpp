// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sdfp/errors.hpp"

namespace sdfp {

/// Block layout of the space H = S^{n_1} x ... x S^{n_l}. Blocks of size 1
/// encode scalar (LP) coordinates.
class BlockStructure {
 public:
  explicit BlockStructure(std::vector<int> sizes);

  int block_count() const { return static_cast<int>(sizes_.size()); }
  int total_dim() const { return total_dim_; }  // n = sum n_s
  int vec_dim() const { return vec_dim_; }      // sum n_s^2
  int size(int s) const { return sizes_[static_cast<std::size_t>(s)]; }
  const std::vector<int>& sizes() const { return sizes_; }

  bool operator==(const BlockStructure& other) const { return sizes_ == other.sizes_; }
  bool operator!=(const BlockStructure& other) const { return !(*this == other); }

 private:
  std::vector<int> sizes_;
  int total_dim_ = 0;
  int vec_dim_ = 0;
};

/// An element of H: a tuple of dense symmetric matrices, one per block.
/// Construction symmetrizes each block via (M + M^T)/2, so a BlockVec is
/// symmetric by construction. Values are immutable after construction;
/// arithmetic returns new values.
class BlockVec {
 public:
  BlockVec(BlockStructure structure, std::vector<Eigen::MatrixXd> blocks);

  static BlockVec zero(const BlockStructure& structure);

  const BlockStructure& structure() const { return structure_; }
  int block_count() const { return structure_.block_count(); }
  const Eigen::MatrixXd& block(int s) const { return blocks_[static_cast<std::size_t>(s)]; }
  const std::vector<Eigen::MatrixXd>& blocks() const { return blocks_; }

  double trace() const;
  double norm() const;      // Frobenius norm over all blocks
  double max_abs() const;   // largest |entry| over all blocks

  BlockVec& operator+=(const BlockVec& other);
  BlockVec& operator-=(const BlockVec& other);
  BlockVec& operator*=(double scale);
  /// *this += scale * other, without materializing a temporary tuple.
  BlockVec& add_scaled(double scale, const BlockVec& other);

  friend BlockVec operator+(BlockVec a, const BlockVec& b) { return a += b; }
  friend BlockVec operator-(BlockVec a, const BlockVec& b) { return a -= b; }
  friend BlockVec operator*(double scale, BlockVec a) { return a *= scale; }
  friend BlockVec operator*(BlockVec a, double scale) { return a *= scale; }

 private:
  BlockStructure structure_;
  std::vector<Eigen::MatrixXd> blocks_;
};

/// An eigenvalue of a BlockVec together with the block it lives in and its
/// unit eigenvector (of length n_s).
struct EigPair {
  double value = 0.0;
  int block_index = 0;
  Eigen::VectorXd vector;
};

/// Symmetric positive definite square root of a tuple and its inverse,
/// computed blockwise via eigendecomposition.
struct PdFactors {
  BlockVec sqrt;
  BlockVec inv_sqrt;
};

/// e = (I_1, ..., I_l); trace(e) = n.
BlockVec identity(const BlockStructure& structure);

/// Trace inner product <x, y> = sum_s tr(x_s y_s).
double inner(const BlockVec& x, const BlockVec& y);

/// Sum of log-determinants over blocks; -infinity if any eigenvalue <= 0.
double logdet(const BlockVec& x);

/// Globally minimal eigenvalue across blocks. Ties are broken by smallest
/// block index, then by the lexicographically smallest sign-normalized
/// eigenvector among the computed candidates with that value.
EigPair min_eigpair(const BlockVec& x);

/// Square-root factors of a positive definite tuple. Throws
/// NotPositiveDefinite when min eig <= 1e-12 * (1 + max diagonal entry).
PdFactors pd_sqrt_factors(const BlockVec& a);

/// Blockwise congruence x_s -> C_s x_s C_s^T. The factors may be
/// nonsymmetric (accumulated scalings are); output is symmetrized.
BlockVec congruence(const std::vector<Eigen::MatrixXd>& c_blocks, const BlockVec& x);
BlockVec congruence(const BlockVec& c, const BlockVec& x);

}  // namespace sdfp
