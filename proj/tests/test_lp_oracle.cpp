// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "lp_oracle.hpp"

using sdfp::testing::LpVerdict;
using sdfp::testing::lp_feasibility_oracle;

TEST_CASE("lp oracle on hand-checked systems") {
  // x1 - x2 = 0 has the positive solution (1, 1)
  Eigen::MatrixXd balanced(1, 2);
  balanced << 1, -1;
  CHECK(lp_feasibility_oracle(balanced) == LpVerdict::Feasible);

  // x1 + x2 = 0 forces opposite signs
  Eigen::MatrixXd opposed(1, 2);
  opposed << 1, 1;
  CHECK(lp_feasibility_oracle(opposed) == LpVerdict::Infeasible);

  // x1 = 0 pins the only coordinate
  Eigen::MatrixXd pinned(1, 1);
  pinned << 1;
  CHECK(lp_feasibility_oracle(pinned) == LpVerdict::Infeasible);

  // trivial kernel: square invertible system
  Eigen::MatrixXd invertible(2, 2);
  invertible << 1, 2, 3, 4;
  CHECK(lp_feasibility_oracle(invertible) == LpVerdict::Infeasible);

  // x1 + x2 - x3 = 0, x2 - x3 = 0: solutions (0, t, t); positivity fails
  // on the first coordinate
  Eigen::MatrixXd pinched(2, 3);
  pinched << 1, 1, -1, 0, 1, -1;
  CHECK(lp_feasibility_oracle(pinched) == LpVerdict::Infeasible);

  // x1 + x2 - 2 x3 = 0 admits (1, 1, 1)
  Eigen::MatrixXd open(1, 3);
  open << 1, 1, -2;
  CHECK(lp_feasibility_oracle(open) == LpVerdict::Feasible);

  // 4 coordinates, kernel of dimension 3
  Eigen::MatrixXd wide(1, 4);
  wide << 1, 1, -1, -1;
  CHECK(lp_feasibility_oracle(wide) == LpVerdict::Feasible);
}
