// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdfp/constraint_map.hpp"
#include "sdfp/rng.hpp"

namespace sdfp {

enum class InstanceKind { PlantedFeasible, CertifiedInfeasible };

struct GeneratorSpec {
  std::vector<int> sizes;
  int m = 1;
  InstanceKind kind = InstanceKind::PlantedFeasible;
  std::uint64_t seed = 0;
  double magnitude = 1.0;
};

/// A positive combination of the rows that is positive definite. Certifies
/// infeasibility: <sum_i w_i A_i, x> = 0 for any kernel x, yet the inner
/// product with an interior x would be strictly positive.
struct InfeasibilityCertificate {
  Eigen::VectorXd weights;  ///< w_1 = 1
  BlockVec combination;     ///< sum_i w_i A_i, positive definite
};

struct GeneratedInstance {
  ConstraintMap map;
  std::optional<BlockVec> planted;  ///< PlantedFeasible: x* with A x* = 0, x* PD, trace 1
  std::optional<InfeasibilityCertificate> certificate;
};

/// Deterministic in the seed. PlantedFeasible draws a well-conditioned PD
/// point on the spectraplex and orthogonalizes random symmetric rows against
/// it; CertifiedInfeasible plants a PD positive combination of the rows.
GeneratedInstance generate_instance(const GeneratorSpec& spec);

/// Random PD spectraplex element W diag(d) W^T / trace, W orthogonal from a
/// QR of a Gaussian matrix, d uniform in [0.1, 1]. Shared by the generator
/// and the samplers in the test suites.
BlockVec random_spectraplex_pd(const BlockStructure& structure, Rng& rng);

/// Random symmetric tuple with Gaussian entries of the given scale.
BlockVec random_symmetric(const BlockStructure& structure, Rng& rng, double scale);

}  // namespace sdfp
