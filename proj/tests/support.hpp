// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sdfp/block_vec.hpp"
#include "sdfp/generator.hpp"
#include "sdfp/rng.hpp"

namespace sdfp::testing {

inline Eigen::MatrixXd gaussian_matrix(int rows, int cols, Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.gaussian();
  }
  return m;
}

/// Random spectraplex element V V^T / tr(V V^T); often near-singular, which
/// exercises the boundary harder than the well-conditioned sampler.
inline BlockVec sample_delta(const BlockStructure& structure, Rng& rng) {
  std::vector<Eigen::MatrixXd> blocks;
  for (int s = 0; s < structure.block_count(); ++s) {
    const Eigen::MatrixXd v = gaussian_matrix(structure.size(s), structure.size(s), rng);
    blocks.push_back(v * v.transpose());
  }
  BlockVec x(structure, std::move(blocks));
  x *= 1.0 / x.trace();
  return x;
}

/// Random cone element of the given scale (V V^T, not normalized).
inline BlockVec sample_cone(const BlockStructure& structure, Rng& rng, double scale = 1.0) {
  std::vector<Eigen::MatrixXd> blocks;
  for (int s = 0; s < structure.block_count(); ++s) {
    const Eigen::MatrixXd v = gaussian_matrix(structure.size(s), structure.size(s), rng);
    blocks.push_back(scale * (v * v.transpose()));
  }
  return BlockVec(structure, std::move(blocks));
}

/// Draws (y, x) on the spectraplex with inner(y, x) <= bound: x leans on the
/// minimum eigenvector of y, mixed with a random element as far as the bound
/// allows.
struct NearOrthogonalPair {
  BlockVec y;
  BlockVec x;
};

inline NearOrthogonalPair sample_near_orthogonal(const BlockStructure& structure, Rng& rng,
                                                 double bound) {
  for (;;) {
    const BlockVec y = sample_delta(structure, rng);
    const EigPair bottom = min_eigpair(y);
    std::vector<Eigen::MatrixXd> blocks;
    for (int s = 0; s < structure.block_count(); ++s) {
      if (s == bottom.block_index) {
        blocks.push_back(bottom.vector * bottom.vector.transpose());
      } else {
        blocks.push_back(Eigen::MatrixXd::Zero(structure.size(s), structure.size(s)));
      }
    }
    const BlockVec base(structure, std::move(blocks));  // <y, base> = lambda_min(y)
    const BlockVec mix = sample_delta(structure, rng);
    const double ip_mix = inner(y, mix);
    const double ip_base = inner(y, base);
    // s * ip_mix + (1-s) * ip_base <= 0.9 * bound
    double s_max = ip_mix > ip_base ? (0.9 * bound - ip_base) / (ip_mix - ip_base) : 1.0;
    s_max = std::min(1.0, std::max(0.0, s_max));
    const double s = rng.uniform(0.0, s_max);
    BlockVec x = base;
    x *= 1.0 - s;
    x.add_scaled(s, mix);
    if (inner(y, x) <= bound) return NearOrthogonalPair{y, x};
  }
}

}  // namespace sdfp::testing
