// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "sdfp/generator.hpp"
#include "sdfp/preprocess.hpp"
#include "support.hpp"

using namespace sdfp;

namespace {

Eigen::MatrixXd scalar(double v) {
  Eigen::MatrixXd m(1, 1);
  m(0, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("homogenize a single scalar row") {
  BlockStructure structure({1});
  ConstraintMap map(structure, {identity(structure)});
  HomogenizedProblem hp = homogenize(map, 0.1);

  CHECK(hp.base.structure().block_count() == 2);
  CHECK(hp.base.structure().total_dim() == 2);
  CHECK(hp.ae[0] == doctest::Approx(1.0));
  CHECK(hp.base.row(0).block(0)(0, 0) == doctest::Approx(1.0));
  CHECK(hp.base.row(0).block(1)(0, 0) == doctest::Approx(-0.1));

  // (0.1, 1) / 1.1 satisfies the extended constraint
  BlockVec point = planted_point(hp);
  CHECK(point.block(0)(0, 0) == doctest::Approx(0.1 / 1.1));
  CHECK(point.block(1)(0, 0) == doctest::Approx(1.0 / 1.1));
  CHECK(apply_map(hp.base, point).cwiseAbs().maxCoeff() <= 1e-15);

  CHECK_THROWS_AS(homogenize(map, 0.0), InvalidBounds);
  CHECK_THROWS_AS(homogenize(map, -0.5), InvalidBounds);
}

TEST_CASE("the planted point is feasible with the promised margin") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GeneratorSpec spec{{2, 2}, 3,
                       seed % 2 ? InstanceKind::PlantedFeasible
                                : InstanceKind::CertifiedInfeasible,
                       seed, 1.0};
    GeneratedInstance instance = generate_instance(spec);
    const int n = instance.map.structure().total_dim();
    const double a_norm = instance.map.row_norm_max();

    for (double delta : {1e-3, 1e-2, 0.5}) {
      HomogenizedProblem hp = homogenize(instance.map, delta);
      BlockVec point = planted_point(hp);
      CHECK(apply_map(hp.base, point).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + a_norm));
      CHECK(min_eigpair(point).value >= delta / (n + 1) - 1e-12);
      CHECK(point.trace() == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("restore: closed forms and the ray error") {
  BlockStructure structure({1, 1});
  BlockVec row(structure, {scalar(1), scalar(-2)});
  ConstraintMap map(structure, {row});
  const double delta = 0.25;
  HomogenizedProblem hp = homogenize(map, delta);

  // xbar = delta * e, t = 1 restores to e/n
  BlockVec xbar_t(hp.base.structure(), {scalar(delta), scalar(delta), scalar(1)});
  RestoreReport report = restore(hp, xbar_t);
  CHECK(report.t == doctest::Approx(1.0));
  CHECK(report.x_hat.block(0)(0, 0) == doctest::Approx(0.5));
  CHECK(report.x_hat.block(1)(0, 0) == doctest::Approx(0.5));
  // bound = delta * ||Ae||_inf / trace(xbar / t) and the recomputation agree
  const double expected_actual =
      apply_map(map, report.x_hat).cwiseAbs().maxCoeff();
  CHECK(report.residual_actual == doctest::Approx(expected_actual));
  CHECK(report.residual_bound == doctest::Approx(delta * 1.0 / (2 * delta)));
  CHECK(report.residual_actual <= report.residual_bound + 1e-12);

  // vanishing t
  BlockVec ray(hp.base.structure(), {scalar(0.5), scalar(0.5), scalar(0)});
  CHECK_THROWS_AS(restore(hp, ray), RayAtInfinity);

  // delta = 0 degenerates to plain normalization
  HomogenizedProblem degenerate{hp.base, 0.0, map, hp.ae};
  BlockVec plain(hp.base.structure(), {scalar(3), scalar(1), scalar(2)});
  RestoreReport normalized = restore(degenerate, plain);
  CHECK(normalized.x_hat.block(0)(0, 0) == doctest::Approx(0.75));
  CHECK(normalized.residual_bound == doctest::Approx(0.0));
}

TEST_CASE("solve_approx returns a PD point matching its residual bound") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GeneratorSpec spec{{2, 1}, 2,
                       seed % 2 ? InstanceKind::PlantedFeasible
                                : InstanceKind::CertifiedInfeasible,
                       seed, 1.0};
    GeneratedInstance instance = generate_instance(spec);
    const double delta = 1e-3;

    ApproxResult approx = solve_approx(instance.map, delta, SolverConfig{});
    REQUIRE(approx.homogenized.status == SolveStatus::Feasible);
    REQUIRE(approx.restored.has_value());

    const RestoreReport& report = *approx.restored;
    CHECK(min_eigpair(report.x_hat).value > 0.0);
    const double recomputed = apply_map(instance.map, report.x_hat).cwiseAbs().maxCoeff();
    CHECK(recomputed == doctest::Approx(report.residual_actual).epsilon(1e-12));
    CHECK(recomputed <= report.residual_bound + 1e-9 * (1.0 + instance.map.row_norm_max()));
  }

  CHECK_THROWS_AS(solve_approx(ConstraintMap(BlockStructure({1}), {}), 1.5, SolverConfig{}),
                  InvalidBounds);
}
