// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

namespace sdfp {

/// Eigendecomposition of a dense symmetric matrix, eigenvalues ascending.
/// The decomposition is deterministic for a fixed input and satisfies
/// ||Q L Q^T - X|| <= 1e-10 * (1 + ||X||) at the scales this library targets.
struct SymEig {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns are eigenvectors, same order as values
};

SymEig sym_eig(const Eigen::MatrixXd& m);

}  // namespace sdfp
