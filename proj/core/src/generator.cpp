// SPDX-License-Identifier: Apache-2.0
#include "sdfp/generator.hpp"

#include <utility>

namespace sdfp {

namespace {

Eigen::MatrixXd random_gaussian(int rows, int cols, Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.gaussian();
  }
  return m;
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
  const Eigen::MatrixXd g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ();
}

Eigen::MatrixXd random_pd_block(int n, Rng& rng, double lo, double hi) {
  const Eigen::MatrixXd w = random_orthogonal(n, rng);
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d[i] = rng.uniform(lo, hi);
  return w * d.asDiagonal() * w.transpose();
}

}  // namespace

BlockVec random_spectraplex_pd(const BlockStructure& structure, Rng& rng) {
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(static_cast<std::size_t>(structure.block_count()));
  for (int s = 0; s < structure.block_count(); ++s) {
    blocks.push_back(random_pd_block(structure.size(s), rng, 0.1, 1.0));
  }
  BlockVec x(structure, std::move(blocks));
  x *= 1.0 / x.trace();
  return x;
}

BlockVec random_symmetric(const BlockStructure& structure, Rng& rng, double scale) {
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(static_cast<std::size_t>(structure.block_count()));
  for (int s = 0; s < structure.block_count(); ++s) {
    blocks.push_back(scale * random_gaussian(structure.size(s), structure.size(s), rng));
  }
  return BlockVec(structure, std::move(blocks));  // constructor symmetrizes
}

GeneratedInstance generate_instance(const GeneratorSpec& spec) {
  if (spec.m < 1) {
    throw InvalidBounds("generate_instance: m must be at least 1");
  }
  const BlockStructure structure(spec.sizes);
  Rng rng(spec.seed);

  if (spec.kind == InstanceKind::PlantedFeasible) {
    const BlockVec planted = random_spectraplex_pd(structure, rng);
    const double planted_sq = inner(planted, planted);
    std::vector<BlockVec> rows;
    rows.reserve(static_cast<std::size_t>(spec.m));
    for (int i = 0; i < spec.m; ++i) {
      BlockVec row = random_symmetric(structure, rng, spec.magnitude);
      row.add_scaled(-inner(row, planted) / planted_sq, planted);
      rows.push_back(std::move(row));
    }
    return GeneratedInstance{ConstraintMap(structure, std::move(rows)), planted,
                             std::nullopt};
  }

  // CertifiedInfeasible: rows A_2..A_m are free, A_1 closes the combination
  // sum_i w_i A_i = M with M positive definite and w_1 = 1.
  Eigen::VectorXd weights(spec.m);
  weights[0] = 1.0;
  for (int i = 1; i < spec.m; ++i) weights[i] = rng.uniform(-1.0, 1.0);

  std::vector<Eigen::MatrixXd> pd_blocks;
  pd_blocks.reserve(static_cast<std::size_t>(structure.block_count()));
  for (int s = 0; s < structure.block_count(); ++s) {
    pd_blocks.push_back(
        random_pd_block(structure.size(s), rng, 0.5 * spec.magnitude, 1.5 * spec.magnitude));
  }
  const BlockVec combination(structure, std::move(pd_blocks));

  std::vector<BlockVec> rows;
  rows.reserve(static_cast<std::size_t>(spec.m));
  BlockVec first = combination;
  for (int i = 1; i < spec.m; ++i) {
    BlockVec row = random_symmetric(structure, rng, spec.magnitude);
    first.add_scaled(-weights[i], row);
    rows.push_back(std::move(row));
  }
  rows.insert(rows.begin(), std::move(first));

  return GeneratedInstance{ConstraintMap(structure, std::move(rows)), std::nullopt,
                           InfeasibilityCertificate{weights, combination}};
}

}  // namespace sdfp
