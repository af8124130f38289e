// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

namespace sdfp::testing {

enum class LpVerdict { Feasible, Infeasible };

/// Brute-force reference for the all-scalar case: does Ax = 0 admit a
/// strictly positive solution? Enumerates an orthonormal kernel basis and
/// scans sign patterns over a grid of coefficient combinations. Built
/// independently of the solver stack on purpose: Eigen's LU kernel plus a
/// grid is all it uses.
inline LpVerdict lp_feasibility_oracle(const Eigen::MatrixXd& a) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(1e-10);
  const Eigen::MatrixXd kernel = lu.kernel();
  // FullPivLU::kernel() returns a single zero column when the kernel is
  // trivial; detect that case by its norm.
  if (kernel.cols() == 0 || kernel.norm() < 1e-14) return LpVerdict::Infeasible;

  const int dim = static_cast<int>(kernel.cols());
  int points_per_axis = 41;
  if (dim <= 3) points_per_axis = 101;
  if (dim <= 2) points_per_axis = 201;

  std::vector<int> index(static_cast<std::size_t>(dim), 0);
  const double step = 2.0 / (points_per_axis - 1);
  for (;;) {
    Eigen::VectorXd coeff(dim);
    for (int d = 0; d < dim; ++d) coeff[d] = -1.0 + step * index[static_cast<std::size_t>(d)];
    if (coeff.cwiseAbs().maxCoeff() > 1e-12) {
      const Eigen::VectorXd x = kernel * coeff;
      const double scale = x.cwiseAbs().maxCoeff();
      if (scale > 1e-12 && (x.minCoeff() / scale) > 1e-6) return LpVerdict::Feasible;
    }
    int d = 0;
    while (d < dim && ++index[static_cast<std::size_t>(d)] == points_per_axis) {
      index[static_cast<std::size_t>(d)] = 0;
      ++d;
    }
    if (d == dim) break;
  }
  return LpVerdict::Infeasible;
}

}  // namespace sdfp::testing
