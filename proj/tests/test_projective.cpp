// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "sdfp/projective.hpp"
#include "support.hpp"

using namespace sdfp;

namespace {

Eigen::MatrixXd scalar(double v) {
  Eigen::MatrixXd m(1, 1);
  m(0, 0) = v;
  return m;
}

BlockVec pair_vec(double a, double b) {
  return BlockVec(BlockStructure({1, 1}), {scalar(a), scalar(b)});
}

}  // namespace

TEST_CASE("apply_Fy: y = 0 is the identity") {
  BlockStructure structure({2, 1});
  Rng rng(7);
  BlockVec x = testing::sample_delta(structure, rng);
  BlockVec out = apply_Fy(BlockVec::zero(structure), x);
  CHECK((out - x).norm() <= 1e-12);
}

TEST_CASE("apply_Fy scalar examples") {
  BlockVec y = pair_vec(1, 0);

  BlockVec out = apply_Fy(y, pair_vec(0.5, 0.5));
  CHECK(out.block(0)(0, 0) == doctest::Approx(2.0 / 3.0));
  CHECK(out.block(1)(0, 0) == doctest::Approx(1.0 / 3.0));

  BlockVec skew = apply_Fy(y, pair_vec(0.05, 0.95));
  CHECK(skew.block(0)(0, 0) == doctest::Approx(0.1 / 1.05).epsilon(1e-12));
  CHECK(skew.block(1)(0, 0) == doctest::Approx(0.95 / 1.05).epsilon(1e-12));
}

TEST_CASE("apply_Fy rejects points off the spectraplex") {
  BlockVec y = pair_vec(1, 0);
  CHECK_THROWS_AS(apply_Fy(y, pair_vec(0.7, 0.7)), DomainError);
  CHECK_THROWS_AS(apply_Fy(y, pair_vec(1.5, -0.5)), DomainError);
}

TEST_CASE("apply_Fy_inverse undoes apply_Fy") {
  BlockVec y = pair_vec(1, 0);
  BlockVec back = apply_Fy_inverse(y, pair_vec(2.0 / 3.0, 1.0 / 3.0));
  CHECK(back.block(0)(0, 0) == doctest::Approx(0.5));
  CHECK(back.block(1)(0, 0) == doctest::Approx(0.5));

  BlockStructure structure({2, 2});
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    BlockVec yy = testing::sample_cone(structure, rng, rng.uniform(0.0, 2.0));
    BlockVec x = testing::sample_delta(structure, rng);
    BlockVec round = apply_Fy_inverse(yy, apply_Fy(yy, x));
    CHECK((round - x).norm() <= 1e-9);
  }
}

TEST_CASE("spectraplex preservation under F_y") {
  BlockStructure structure({3, 1});
  Rng rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    BlockVec y = testing::sample_delta(structure, rng);
    BlockVec x = testing::sample_delta(structure, rng);
    BlockVec out = apply_Fy(y, x);
    CHECK(out.trace() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(min_eigpair(out).value >= -1e-10);
  }
}

TEST_CASE("denominator identity <e, L_{e+y} x> = 1 + <y, x>") {
  BlockStructure structure({2, 2, 1});
  Rng rng(43);
  BlockVec e = identity(structure);
  for (int trial = 0; trial < 300; ++trial) {
    BlockVec y = testing::sample_delta(structure, rng);
    BlockVec x = testing::sample_delta(structure, rng);
    PdFactors f = pd_sqrt_factors(e + y);
    const double lhs = congruence(f.sqrt, x).trace();
    CHECK(lhs == doctest::Approx(1.0 + inner(y, x)).epsilon(1e-10));
  }
}

TEST_CASE("compose_scaling accumulates factors") {
  BlockStructure structure({1, 1});
  ScalingState state(structure);
  CHECK(state.count() == 0);

  ScalingState one = compose_scaling(state, pair_vec(1, 0));
  CHECK(one.count() == 1);
  CHECK(one.forward_blocks()[0](0, 0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(one.forward_blocks()[1](0, 0) == doctest::Approx(1.0));

  // composing with zero leaves the factors, bumps the counter
  ScalingState two = compose_scaling(one, BlockVec::zero(structure));
  CHECK(two.count() == 2);
  CHECK(two.forward_blocks()[0](0, 0) == doctest::Approx(std::sqrt(2.0)));

  // diagonal factors multiply
  ScalingState three = compose_scaling(two, pair_vec(3, 0));
  CHECK(three.forward_blocks()[0](0, 0) == doctest::Approx(std::sqrt(2.0) * 2.0));
  CHECK(three.inverse_blocks()[0](0, 0) == doctest::Approx(1.0 / (std::sqrt(2.0) * 2.0)));
}

TEST_CASE("pull_back and push_forward invert each other") {
  BlockStructure structure({1, 1});
  ScalingState state(structure);

  // identity state normalizes
  BlockVec x = pair_vec(2, 2);
  BlockVec back = pull_back(state, x);
  CHECK(back.block(0)(0, 0) == doctest::Approx(0.5));

  state = compose_scaling(state, pair_vec(1, 0));
  BlockVec pulled = pull_back(state, pair_vec(2.0 / 3.0, 1.0 / 3.0));
  CHECK(pulled.block(0)(0, 0) == doctest::Approx(0.5));
  CHECK(pulled.block(1)(0, 0) == doctest::Approx(0.5));

  Rng rng(71);
  BlockStructure wide({2, 3});
  ScalingState acc(wide);
  for (int k = 0; k < 4; ++k) acc = compose_scaling(acc, testing::sample_delta(wide, rng));
  for (int trial = 0; trial < 100; ++trial) {
    BlockVec z = testing::sample_delta(wide, rng);
    CHECK((pull_back(acc, push_forward(acc, z)) - z).norm() <= 1e-9);
  }

  CHECK_THROWS_AS(pull_back(acc, BlockVec::zero(wide)), ZeroVector);
}

TEST_CASE("push_forward equals the iterated projective transformations") {
  BlockStructure structure({2, 1});
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BlockVec> ys;
    for (int k = 0; k < 5; ++k) ys.push_back(testing::sample_delta(structure, rng));

    ScalingState state(structure);
    for (const BlockVec& y : ys) state = compose_scaling(state, y);

    BlockVec x = testing::sample_delta(structure, rng);
    BlockVec iterated = x;
    for (const BlockVec& y : ys) iterated = apply_Fy(y, iterated);

    CHECK((push_forward(state, x) - iterated).norm() <= 1e-8);
  }

  // single composition matches apply_Fy directly
  BlockVec y = testing::sample_delta(structure, rng);
  BlockVec x = testing::sample_delta(structure, rng);
  ScalingState single = compose_scaling(ScalingState(structure), y);
  CHECK((push_forward(single, x) - apply_Fy(y, x)).norm() <= 1e-10);
}
