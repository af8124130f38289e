// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdfp/block_vec.hpp"
#include "sdfp/constraint_map.hpp"
#include "sdfp/potential.hpp"
#include "sdfp/projective.hpp"

namespace sdfp {

struct SolverConfig {
  /// Eigenvalue level defining the infeasibility verdict: exhausting the
  /// scaling budget certifies that no solution on the spectraplex has
  /// minimum eigenvalue >= lambda_threshold. Must satisfy
  /// 0 < lambda_threshold < 1/n.
  double lambda_threshold = 1e-3;
  /// Scale factor of the feasibility test: the projected y counts as
  /// interior once its minimum eigenvalue exceeds
  /// feasibility_eig_tol * (1 + ||Py||).
  double feasibility_eig_tol = 1e-12;
  /// Final certificate tolerance: a feasible exit must satisfy
  /// ||Ax||_inf <= residual_tol * (1 + max_i ||A_i||).
  double residual_tol = 1e-8;
  /// Safety cap on while-iterations; hitting it is a numerical outcome, not
  /// a mathematical verdict.
  std::int64_t max_total_iterations = 50'000'000;
  bool trace_enabled = false;
  /// Reserved for randomized extensions; the core loop is deterministic.
  std::uint64_t seed = 0;
};

enum class SolveStatus { Feasible, InfeasibleAtLevel, BudgetExhausted };
enum class TraceEvent { Step, Scaling, Found };

struct TraceRecord {
  std::int64_t step_index = 0;  ///< while-iteration counter
  std::int64_t k = 0;           ///< scalings composed so far
  double norm_py = 0.0;         ///< ||P y|| after the event
  double inv_sq_norm = 0.0;     ///< ||P y||^{-2}; +inf when the norm vanishes
  /// ln det of the pulled-back candidate; set at Scaling and Found events.
  std::optional<double> log_potential_of_py_pullback;
  /// Running condition estimate of the accumulated scaling; Scaling events.
  std::optional<double> cond_estimate;
  TraceEvent event = TraceEvent::Step;
};

struct SolveResult {
  SolveStatus status = SolveStatus::BudgetExhausted;
  std::optional<BlockVec> x;  ///< present when Feasible; on the spectraplex
  std::int64_t scalings_used = 0;
  std::int64_t basic_steps_used = 0;
  double residual = 0.0;  ///< ||Ax||_inf of the returned x (NaN otherwise)
  double min_eig = 0.0;   ///< min eigenvalue of the returned x (NaN otherwise)
  double lambda_threshold = 0.0;  ///< echoed from the config
  std::vector<TraceRecord> trace;
  /// The y composed at each scaling iteration, in order. Lets callers replay
  /// the transformation sequence.
  std::vector<BlockVec> scaling_ys;
};

/// Direction choice of the basic procedure. Returns the globally minimal
/// eigenpair of py when its value is <= tol (then u = v v^T supported on
/// that block satisfies <u, py> = lambda_min <= tol), or nothing when py is
/// safely interior (every u on the spectraplex has <u, py> > 0).
std::optional<EigPair> choose_direction_u(const BlockVec& py, double tol);

/// The rank-one spectraplex element v v^T placed in the pair's block.
BlockVec rank_one(const BlockStructure& structure, const EigPair& pair);

/// One step of the basic procedure: y' = alpha y + (1 - alpha) u where alpha
/// places P y' at the projection of the origin onto [P y, P u]. Alpha is
/// clamped to [0, 1]. Throws DegenerateStep when ||P(u - y)|| <= 1e-14.
BlockVec basic_step(const KernelProjector& projector, const BlockVec& y, const BlockVec& u);

/// Runs the projective-scaling loop on Ax = 0, x interior to the cone.
SolveResult solve(const ConstraintMap& problem, const SolverConfig& config);

/// Independent recomputation of the certificate quantities for a claimed
/// solution: residual, trace and minimum eigenvalue, from scratch.
struct CertificateReport {
  double residual_inf = 0.0;
  double trace = 0.0;
  double min_eig = 0.0;
  bool residual_ok = false;
  bool positive_definite = false;
  bool pass = false;
};

CertificateReport verify_certificate(const ConstraintMap& problem, const BlockVec& x,
                                     double tol);

}  // namespace sdfp
