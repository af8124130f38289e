// SPDX-License-Identifier: Apache-2.0
#include "sdfp/solver.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <utility>

namespace sdfp {

std::optional<EigPair> choose_direction_u(const BlockVec& py, double tol) {
  EigPair pair = min_eigpair(py);
  if (pair.value > tol) return std::nullopt;
  return pair;
}

BlockVec rank_one(const BlockStructure& structure, const EigPair& pair) {
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(static_cast<std::size_t>(structure.block_count()));
  for (int s = 0; s < structure.block_count(); ++s) {
    if (s == pair.block_index) {
      blocks.push_back(pair.vector * pair.vector.transpose());
    } else {
      blocks.push_back(Eigen::MatrixXd::Zero(structure.size(s), structure.size(s)));
    }
  }
  return BlockVec(structure, std::move(blocks));
}

namespace {

// alpha placing alpha*py + (1-alpha)*pu at the projection of the origin onto
// the segment [py, pu]; nullopt when the segment degenerates. The clamp is
// inactive in exact arithmetic because <py, pu> <= 0; activations beyond
// noise level happen once ||py|| sinks to rounding scale and get logged,
// either immediately or into the caller's counter.
std::optional<double> segment_alpha(const BlockVec& py, const BlockVec& pu,
                                    std::int64_t* clamp_count = nullptr) {
  BlockVec diff = pu;
  diff -= py;
  const double len_sq = inner(diff, diff);
  if (std::sqrt(len_sq) <= 1e-14) return std::nullopt;
  const double alpha = inner(pu, diff) / len_sq;
  const double clamped = std::min(1.0, std::max(0.0, alpha));
  if (std::abs(alpha - clamped) > 1e-9) {
    if (clamp_count) {
      ++*clamp_count;
    } else {
      std::fprintf(stderr, "sdfp: warning: step coefficient %.3e clamped to [0, 1]\n", alpha);
    }
  }
  return clamped;
}

// One summary line per solve run instead of one per clamped step.
struct ClampLog {
  std::int64_t count = 0;
  ~ClampLog() {
    if (count > 0) {
      std::fprintf(stderr,
                   "sdfp: warning: %lld step coefficient(s) clamped to [0, 1] "
                   "(projection at rounding scale)\n",
                   static_cast<long long>(count));
    }
  }
};

BlockVec combine(const BlockVec& a, const BlockVec& b, double alpha) {
  BlockVec out = a;
  out *= alpha;
  out.add_scaled(1.0 - alpha, b);
  return out;
}

double inf_norm(const Eigen::VectorXd& v) {
  return v.size() > 0 ? v.cwiseAbs().maxCoeff() : 0.0;
}

struct TraceSink {
  bool enabled = false;
  std::vector<TraceRecord>* records = nullptr;

  void emit(TraceEvent event, std::int64_t step_index, std::int64_t k, double norm_py,
            std::optional<double> potential = std::nullopt,
            std::optional<double> cond = std::nullopt) const {
    if (!enabled) return;
    TraceRecord rec;
    rec.event = event;
    rec.step_index = step_index;
    rec.k = k;
    rec.norm_py = norm_py;
    rec.inv_sq_norm = norm_py > 0.0 ? 1.0 / (norm_py * norm_py)
                                    : std::numeric_limits<double>::infinity();
    rec.log_potential_of_py_pullback = potential;
    rec.cond_estimate = cond;
    records->push_back(rec);
  }
};

}  // namespace

BlockVec basic_step(const KernelProjector& projector, const BlockVec& y, const BlockVec& u) {
  const std::optional<double> alpha =
      segment_alpha(project(projector, y), project(projector, u));
  if (!alpha) {
    throw DegenerateStep("basic_step: P u equals P y; the segment has no direction");
  }
  return combine(y, u, *alpha);
}

SolveResult solve(const ConstraintMap& problem, const SolverConfig& config) {
  const BlockStructure& structure = problem.structure();
  const int n = structure.total_dim();
  if (!(config.lambda_threshold > 0.0) || !(config.lambda_threshold < 1.0 / n)) {
    throw InvalidBounds("solve: lambda_threshold must lie in (0, 1/n)");
  }

  const Calibration cal = calibrate(n, n * std::log(config.lambda_threshold));
  const std::int64_t k_max = scaling_budget(cal);
  const double trigger = cal.epsilon / (cal.theta * cal.theta);

  SolveResult result;
  result.lambda_threshold = config.lambda_threshold;
  result.residual = std::numeric_limits<double>::quiet_NaN();
  result.min_eig = std::numeric_limits<double>::quiet_NaN();
  TraceSink sink{config.trace_enabled, &result.trace};

  const BlockVec e = identity(structure);
  ConstraintMap scaled = problem;
  KernelProjector projector = build_projector(scaled);
  ScalingState state(structure);
  BlockVec y = (1.0 / n) * identity(structure);  // spectraplex center
  ClampLog clamp_log;

  std::int64_t iteration = 0;
  while (state.count() < k_max) {
    if (iteration >= config.max_total_iterations) {
      result.status = SolveStatus::BudgetExhausted;
      result.scalings_used = state.count();
      return result;
    }
    ++iteration;

    const BlockVec py = project(projector, y);
    const double norm_py = py.norm();
    const double eig_tol = config.feasibility_eig_tol * (1.0 + norm_py);
    const std::optional<EigPair> direction = choose_direction_u(py, eig_tol);

    if (!direction) {
      // P y is interior: <u, Py> >= lambda_min(Py) > 0 for every u on the
      // spectraplex, so the pulled-back projection solves the original
      // problem.
      BlockVec x = pull_back(state, py);
      result.status = SolveStatus::Feasible;
      result.scalings_used = state.count();
      result.residual = inf_norm(apply_map(problem, x));
      result.min_eig = min_eigpair(x).value;
      sink.emit(TraceEvent::Found, iteration, state.count(), norm_py, log_potential(x));
      if (result.residual > config.residual_tol * (1.0 + problem.row_norm_max())) {
        throw NumericalError("solve: feasible exit violates the residual tolerance");
      }
      result.x = std::move(x);
      return result;
    }

    const BlockVec u = rank_one(structure, *direction);
    const BlockVec pu = project(projector, u);
    const std::optional<double> alpha = segment_alpha(py, pu, &clamp_log.count);
    double norm_after = norm_py;
    if (alpha) {
      y = combine(y, u, *alpha);
      ++result.basic_steps_used;
      // The projector is linear, so the new ||Py|| comes from the same
      // combination of py and pu; no second Gram solve is needed.
      norm_after = combine(py, pu, *alpha).norm();
      sink.emit(TraceEvent::Step, iteration, state.count(), norm_after);
    } else if (!(norm_py <= trigger)) {
      // P u == P y with ||Py|| still above the scaling trigger: the segment
      // cannot shrink and the analysis no longer applies.
      throw DegenerateStep("solve: degenerate step outside the scaling regime");
    }

    if (norm_after <= trigger) {
      state = compose_scaling(state, y);
      scaled = rescale_map(scaled, pd_sqrt_factors(e + y).inv_sqrt);
      projector = build_projector(scaled);
      result.scaling_ys.push_back(y);
      sink.emit(TraceEvent::Scaling, iteration, state.count(), norm_after,
                log_potential(pull_back(state, y)), state.cond_estimate());
      // y is kept as-is across the scaling, matching the loop contract.
    }
  }

  result.status = SolveStatus::InfeasibleAtLevel;
  result.scalings_used = state.count();
  return result;
}

CertificateReport verify_certificate(const ConstraintMap& problem, const BlockVec& x,
                                     double tol) {
  CertificateReport report;
  report.residual_inf = inf_norm(apply_map(problem, x));
  report.trace = x.trace();
  report.min_eig = min_eigpair(x).value;
  report.residual_ok = report.residual_inf <= tol * (1.0 + problem.row_norm_max());
  report.positive_definite = report.min_eig > 0.0;
  report.pass = report.residual_ok && report.positive_definite;
  return report;
}

}  // namespace sdfp
