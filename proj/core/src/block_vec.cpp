// SPDX-License-Identifier: Apache-2.0
#include "sdfp/block_vec.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "sdfp/sym_eig.hpp"

namespace sdfp {

BlockStructure::BlockStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) {
    throw DimensionMismatch("block structure needs at least one block");
  }
  for (int n : sizes_) {
    if (n < 1) {
      throw DimensionMismatch("block sizes must be positive");
    }
    total_dim_ += n;
    vec_dim_ += n * n;
  }
}

BlockVec::BlockVec(BlockStructure structure, std::vector<Eigen::MatrixXd> blocks)
    : structure_(std::move(structure)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != structure_.block_count()) {
    throw DimensionMismatch("block count does not match the structure");
  }
  for (int s = 0; s < structure_.block_count(); ++s) {
    Eigen::MatrixXd& b = blocks_[static_cast<std::size_t>(s)];
    const int n = structure_.size(s);
    if (b.rows() != n || b.cols() != n) {
      throw DimensionMismatch("block " + std::to_string(s) + " is not " +
                              std::to_string(n) + "x" + std::to_string(n));
    }
    b = 0.5 * (b + b.transpose()).eval();
  }
}

BlockVec BlockVec::zero(const BlockStructure& structure) {
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(static_cast<std::size_t>(structure.block_count()));
  for (int s = 0; s < structure.block_count(); ++s) {
    blocks.push_back(Eigen::MatrixXd::Zero(structure.size(s), structure.size(s)));
  }
  return BlockVec(structure, std::move(blocks));
}

double BlockVec::trace() const {
  double t = 0.0;
  for (const auto& b : blocks_) t += b.trace();
  return t;
}

double BlockVec::norm() const {
  double sq = 0.0;
  for (const auto& b : blocks_) sq += b.squaredNorm();
  return std::sqrt(sq);
}

double BlockVec::max_abs() const {
  double m = 0.0;
  for (const auto& b : blocks_) {
    if (b.size() > 0) m = std::max(m, b.cwiseAbs().maxCoeff());
  }
  return m;
}

namespace {

void check_same_structure(const BlockVec& x, const BlockVec& y) {
  if (x.structure() != y.structure()) {
    throw StructureMismatch("block structures differ");
  }
}

}  // namespace

BlockVec& BlockVec::operator+=(const BlockVec& other) {
  check_same_structure(*this, other);
  for (std::size_t s = 0; s < blocks_.size(); ++s) blocks_[s] += other.blocks_[s];
  return *this;
}

BlockVec& BlockVec::operator-=(const BlockVec& other) {
  check_same_structure(*this, other);
  for (std::size_t s = 0; s < blocks_.size(); ++s) blocks_[s] -= other.blocks_[s];
  return *this;
}

BlockVec& BlockVec::operator*=(double scale) {
  for (auto& b : blocks_) b *= scale;
  return *this;
}

BlockVec& BlockVec::add_scaled(double scale, const BlockVec& other) {
  check_same_structure(*this, other);
  for (std::size_t s = 0; s < blocks_.size(); ++s) {
    blocks_[s] += scale * other.blocks_[s];
  }
  return *this;
}

BlockVec identity(const BlockStructure& structure) {
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(static_cast<std::size_t>(structure.block_count()));
  for (int s = 0; s < structure.block_count(); ++s) {
    blocks.push_back(Eigen::MatrixXd::Identity(structure.size(s), structure.size(s)));
  }
  return BlockVec(structure, std::move(blocks));
}

double inner(const BlockVec& x, const BlockVec& y) {
  check_same_structure(x, y);
  double acc = 0.0;
  for (int s = 0; s < x.block_count(); ++s) {
    // tr(x_s y_s) for symmetric blocks is the entrywise dot product.
    acc += x.block(s).cwiseProduct(y.block(s)).sum();
  }
  return acc;
}

double logdet(const BlockVec& x) {
  double acc = 0.0;
  for (int s = 0; s < x.block_count(); ++s) {
    const SymEig eig = sym_eig(x.block(s));
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
      if (eig.values[i] <= 0.0) {
        return -std::numeric_limits<double>::infinity();
      }
      acc += std::log(eig.values[i]);
    }
  }
  return acc;
}

namespace {

// Flips the sign so the first component larger than 1e-12 in magnitude is
// positive. Unit vectors only.
void sign_normalize(Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace

EigPair min_eigpair(const BlockVec& x) {
  EigPair best;
  bool have = false;
  for (int s = 0; s < x.block_count(); ++s) {
    const SymEig eig = sym_eig(x.block(s));
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
      const double v = eig.values[i];
      if (have && v > best.value) continue;
      Eigen::VectorXd vec = eig.vectors.col(i);
      sign_normalize(vec);
      if (!have || v < best.value || s < best.block_index ||
          (s == best.block_index && lex_less(vec, best.vector))) {
        best = EigPair{v, s, std::move(vec)};
        have = true;
      }
    }
  }
  return best;
}

PdFactors pd_sqrt_factors(const BlockVec& a) {
  double max_diag = 0.0;
  for (int s = 0; s < a.block_count(); ++s) {
    max_diag = std::max(max_diag, a.block(s).diagonal().maxCoeff());
  }
  const double pd_tolerance = 1e-12 * (1.0 + max_diag);

  std::vector<Eigen::MatrixXd> sqrt_blocks, inv_sqrt_blocks;
  sqrt_blocks.reserve(a.blocks().size());
  inv_sqrt_blocks.reserve(a.blocks().size());
  for (int s = 0; s < a.block_count(); ++s) {
    const SymEig eig = sym_eig(a.block(s));
    if (eig.values.minCoeff() <= pd_tolerance) {
      throw NotPositiveDefinite("tuple is not positive definite (block " +
                                std::to_string(s) + ")");
    }
    const Eigen::VectorXd roots = eig.values.cwiseSqrt();
    sqrt_blocks.push_back(eig.vectors * roots.asDiagonal() * eig.vectors.transpose());
    inv_sqrt_blocks.push_back(eig.vectors * roots.cwiseInverse().asDiagonal() *
                              eig.vectors.transpose());
  }
  return PdFactors{BlockVec(a.structure(), std::move(sqrt_blocks)),
                   BlockVec(a.structure(), std::move(inv_sqrt_blocks))};
}

BlockVec congruence(const std::vector<Eigen::MatrixXd>& c_blocks, const BlockVec& x) {
  if (static_cast<int>(c_blocks.size()) != x.block_count()) {
    throw DimensionMismatch("congruence factor count does not match the structure");
  }
  std::vector<Eigen::MatrixXd> out;
  out.reserve(c_blocks.size());
  for (int s = 0; s < x.block_count(); ++s) {
    const Eigen::MatrixXd& c = c_blocks[static_cast<std::size_t>(s)];
    const int n = x.structure().size(s);
    if (c.rows() != n || c.cols() != n) {
      throw DimensionMismatch("congruence factor " + std::to_string(s) +
                              " is not " + std::to_string(n) + "x" + std::to_string(n));
    }
    out.push_back(c * x.block(s) * c.transpose());
  }
  return BlockVec(x.structure(), std::move(out));
}

BlockVec congruence(const BlockVec& c, const BlockVec& x) {
  return congruence(c.blocks(), x);
}

}  // namespace sdfp
