// SPDX-License-Identifier: Apache-2.0
#include "sdfp/projective.hpp"

#include <cmath>
#include <utility>

#include "sdfp/sym_eig.hpp"

namespace sdfp {

namespace {

void check_spectraplex(const BlockVec& x, const char* who) {
  if (std::abs(x.trace() - 1.0) > 1e-9) {
    throw DomainError(std::string(who) + ": argument is not trace-one");
  }
  if (min_eigpair(x).value < -1e-9) {
    throw DomainError(std::string(who) + ": argument is not positive semidefinite");
  }
}

}  // namespace

BlockVec apply_Fy(const BlockVec& y, const BlockVec& x) {
  check_spectraplex(x, "apply_Fy");
  const BlockVec e = identity(x.structure());
  const PdFactors factors = pd_sqrt_factors(e + y);
  BlockVec out = congruence(factors.sqrt, x);
  out *= 1.0 / (1.0 + inner(y, x));
  return out;
}

BlockVec apply_Fy_inverse(const BlockVec& y, const BlockVec& x_prime) {
  check_spectraplex(x_prime, "apply_Fy_inverse");
  const BlockVec e = identity(x_prime.structure());
  const PdFactors factors = pd_sqrt_factors(e + y);
  BlockVec out = congruence(factors.inv_sqrt, x_prime);
  out *= 1.0 / out.trace();  // <e, L^{-1}(x')> > 0 for x' on the spectraplex
  return out;
}

ScalingState::ScalingState(BlockStructure structure) : structure_(std::move(structure)) {
  forward_.reserve(static_cast<std::size_t>(structure_.block_count()));
  inverse_.reserve(static_cast<std::size_t>(structure_.block_count()));
  for (int s = 0; s < structure_.block_count(); ++s) {
    forward_.push_back(Eigen::MatrixXd::Identity(structure_.size(s), structure_.size(s)));
    inverse_.push_back(Eigen::MatrixXd::Identity(structure_.size(s), structure_.size(s)));
  }
}

ScalingState compose_scaling(const ScalingState& state, const BlockVec& y) {
  if (y.structure() != state.structure_) {
    throw StructureMismatch("compose_scaling: structure mismatch");
  }
  const BlockVec e = identity(state.structure_);
  const BlockVec shifted = e + y;
  const PdFactors factors = pd_sqrt_factors(shifted);

  ScalingState next = state;
  double cond_step = 1.0;
  for (int s = 0; s < state.structure_.block_count(); ++s) {
    next.forward_[static_cast<std::size_t>(s)] =
        factors.sqrt.block(s) * state.forward_[static_cast<std::size_t>(s)];
    next.inverse_[static_cast<std::size_t>(s)] =
        state.inverse_[static_cast<std::size_t>(s)] * factors.inv_sqrt.block(s);
    const SymEig eig = sym_eig(shifted.block(s));
    cond_step = std::max(cond_step, eig.values.maxCoeff() / eig.values.minCoeff());
  }
  next.count_ = state.count_ + 1;
  next.cond_estimate_ = state.cond_estimate_ * std::sqrt(cond_step);
  return next;
}

namespace {

BlockVec normalized_congruence(const std::vector<Eigen::MatrixXd>& factor,
                               const BlockVec& x, const char* who) {
  BlockVec out = congruence(factor, x);
  const double t = out.trace();
  if (!(t > 1e-300)) {
    throw ZeroVector(std::string(who) + ": tuple has vanishing trace");
  }
  out *= 1.0 / t;
  return out;
}

}  // namespace

BlockVec pull_back(const ScalingState& state, const BlockVec& x) {
  if (x.structure() != state.structure()) {
    throw StructureMismatch("pull_back: structure mismatch");
  }
  return normalized_congruence(state.inverse_blocks(), x, "pull_back");
}

BlockVec push_forward(const ScalingState& state, const BlockVec& x) {
  if (x.structure() != state.structure()) {
    throw StructureMismatch("push_forward: structure mismatch");
  }
  return normalized_congruence(state.forward_blocks(), x, "push_forward");
}

}  // namespace sdfp
