// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sdfp/block_vec.hpp"

namespace sdfp {

/// F_y(x) = L_{e+y}(x) / (1 + <y, x>). Maps the spectraplex onto itself.
/// Throws DomainError when x is not on the spectraplex (trace 1 +- 1e-9,
/// min eigenvalue >= -1e-9).
BlockVec apply_Fy(const BlockVec& y, const BlockVec& x);

/// Inverse transformation: L_{e+y}^{-1}(x') renormalized to trace one.
BlockVec apply_Fy_inverse(const BlockVec& y, const BlockVec& x_prime);

/// Accumulated congruence factors for L = L_{e+y_k} o ... o L_{e+y_1},
/// stored as L(x) = C x C^T blockwise together with C^{-1}. Composing with a
/// new y premultiplies C by (e+y)^{1/2}, so pull-back cost is independent of
/// how many scalings have happened. Immutable value; composition returns a
/// new state.
class ScalingState {
 public:
  explicit ScalingState(BlockStructure structure);

  const BlockStructure& structure() const { return structure_; }
  const std::vector<Eigen::MatrixXd>& forward_blocks() const { return forward_; }
  const std::vector<Eigen::MatrixXd>& inverse_blocks() const { return inverse_; }
  int count() const { return count_; }  // k, the number of scalings composed

  /// Running upper bound on cond(C): product of sqrt(max eig / min eig) of
  /// the composed e+y factors. Purely diagnostic.
  double cond_estimate() const { return cond_estimate_; }

  friend ScalingState compose_scaling(const ScalingState& state, const BlockVec& y);

 private:
  BlockStructure structure_;
  std::vector<Eigen::MatrixXd> forward_;
  std::vector<Eigen::MatrixXd> inverse_;
  int count_ = 0;
  double cond_estimate_ = 1.0;
};

/// New state with C := (e+y)^{1/2} C and C^{-1} := C^{-1} (e+y)^{-1/2}.
ScalingState compose_scaling(const ScalingState& state, const BlockVec& y);

/// C^{-1} x C^{-T}, renormalized to trace one. Maps a solution of the scaled
/// problem back to a solution of the original one on the spectraplex.
/// Throws ZeroVector when x has trace ~0.
BlockVec pull_back(const ScalingState& state, const BlockVec& x);

/// C x C^T, renormalized to trace one; equals the composition of the
/// individual F_{y_i}.
BlockVec push_forward(const ScalingState& state, const BlockVec& x);

}  // namespace sdfp
