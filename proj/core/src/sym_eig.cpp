// SPDX-License-Identifier: Apache-2.0
#include "sdfp/sym_eig.hpp"

#include "sdfp/errors.hpp"

namespace sdfp {

SymEig sym_eig(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigendecomposition did not converge");
  }
  return SymEig{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace sdfp
