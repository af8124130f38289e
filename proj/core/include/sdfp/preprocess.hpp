// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <optional>

#include "sdfp/constraint_map.hpp"
#include "sdfp/solver.hpp"

namespace sdfp {

/// The delta-perturbed, homogenized problem A xbar - delta t A(e) = 0 over
/// the original blocks extended by one scalar block housing t. Feasible by
/// construction: (delta e, 1), normalized to trace one, always satisfies it.
struct HomogenizedProblem {
  ConstraintMap base;      ///< extended map: row i = (A_i, -delta * ae_i)
  double delta = 0.0;
  ConstraintMap original;
  Eigen::VectorXd ae;      ///< A(e) of the original map
};

/// Builds the homogenization. Throws InvalidBounds for delta <= 0.
HomogenizedProblem homogenize(const ConstraintMap& map, double delta);

/// The guaranteed solution (delta e, 1) / (1 + delta n) on the extended
/// spectraplex; its minimum eigenvalue is delta / (1 + delta n).
BlockVec planted_point(const HomogenizedProblem& hp);

struct RestoreReport {
  BlockVec x_hat;               ///< over the original structure, trace one
  double t = 0.0;               ///< the homogenization coordinate
  double residual_bound = 0.0;  ///< delta * ||A(e)||_inf / trace(xbar / t)
  double residual_actual = 0.0; ///< recomputed ||A x_hat||_inf
};

/// Maps a solution of the homogenized problem back to an approximate
/// solution of the original one. Throws RayAtInfinity when the t coordinate
/// is ~0.
RestoreReport restore(const HomogenizedProblem& hp, const BlockVec& xbar_t);

struct ApproxResult {
  HomogenizedProblem problem;
  SolveResult homogenized;
  std::optional<RestoreReport> restored;  ///< present when the solve succeeded
};

/// Homogenized ("approx") mode: solves the perturbed problem with the
/// eigenvalue level delta / (n + 1) matching the guaranteed point, then
/// restores. Requires 0 < delta < 1.
ApproxResult solve_approx(const ConstraintMap& map, double delta, SolverConfig config);

}  // namespace sdfp
