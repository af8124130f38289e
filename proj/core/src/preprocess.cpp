// SPDX-License-Identifier: Apache-2.0
#include "sdfp/preprocess.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace sdfp {

namespace {

BlockStructure extended_structure(const BlockStructure& original) {
  std::vector<int> sizes = original.sizes();
  sizes.push_back(1);
  return BlockStructure(std::move(sizes));
}

}  // namespace

HomogenizedProblem homogenize(const ConstraintMap& map, double delta) {
  if (!(delta > 0.0)) {
    throw InvalidBounds("homogenize: delta must be positive");
  }
  const Eigen::VectorXd ae = apply_map(map, identity(map.structure()));
  const BlockStructure ext = extended_structure(map.structure());

  std::vector<BlockVec> rows;
  rows.reserve(static_cast<std::size_t>(map.num_rows()));
  for (int i = 0; i < map.num_rows(); ++i) {
    std::vector<Eigen::MatrixXd> blocks = map.row(i).blocks();
    Eigen::MatrixXd tail(1, 1);
    tail(0, 0) = -delta * ae[i];
    blocks.push_back(std::move(tail));
    rows.emplace_back(ext, std::move(blocks));
  }
  return HomogenizedProblem{ConstraintMap(ext, std::move(rows)), delta, map, ae};
}

BlockVec planted_point(const HomogenizedProblem& hp) {
  const int n = hp.original.structure().total_dim();
  std::vector<Eigen::MatrixXd> blocks = (hp.delta * identity(hp.original.structure())).blocks();
  Eigen::MatrixXd tail(1, 1);
  tail(0, 0) = 1.0;
  blocks.push_back(std::move(tail));
  BlockVec point(hp.base.structure(), std::move(blocks));
  point *= 1.0 / (1.0 + hp.delta * n);
  return point;
}

RestoreReport restore(const HomogenizedProblem& hp, const BlockVec& xbar_t) {
  if (xbar_t.structure() != hp.base.structure()) {
    throw StructureMismatch("restore: solution structure does not match the homogenization");
  }
  const int l = hp.original.structure().block_count();
  const double t = xbar_t.block(l)(0, 0);
  if (t <= 1e-12 * (1.0 + xbar_t.trace())) {
    throw RayAtInfinity("restore: homogenization coordinate vanished");
  }

  std::vector<Eigen::MatrixXd> blocks(xbar_t.blocks().begin(), xbar_t.blocks().end() - 1);
  BlockVec xbar(hp.original.structure(), std::move(blocks));
  const double scaled_trace = xbar.trace() / t;  // trace(xbar / t)

  RestoreReport report{xbar * (1.0 / xbar.trace()), t, 0.0, 0.0};
  if (hp.original.num_rows() > 0 && scaled_trace > 0.0) {
    report.residual_bound = hp.delta * hp.ae.cwiseAbs().maxCoeff() / scaled_trace;
    report.residual_actual = apply_map(hp.original, report.x_hat).cwiseAbs().maxCoeff();
  }
  return report;
}

ApproxResult solve_approx(const ConstraintMap& map, double delta, SolverConfig config) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidBounds("solve_approx: delta must lie in (0, 1)");
  }
  HomogenizedProblem hp = homogenize(map, delta);
  const int n = map.structure().total_dim();
  // The guaranteed point has minimum eigenvalue >= delta/(n+1) on the
  // extended spectraplex, so this level makes the run succeed whenever the
  // numerics hold up.
  config.lambda_threshold = delta / (n + 1);

  SolveResult solved = solve(hp.base, config);
  ApproxResult out{std::move(hp), std::move(solved), std::nullopt};
  if (out.homogenized.status == SolveStatus::Feasible && out.homogenized.x) {
    out.restored = restore(out.problem, *out.homogenized.x);
  }
  return out;
}

}  // namespace sdfp
