// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "sdfp/block_vec.hpp"
#include "sdfp/generator.hpp"
#include "sdfp/solver.hpp"

namespace sdfp {

/// JSON forms. Non-finite numbers are emitted as null.
nlohmann::json blockvec_to_json(const BlockVec& x);
BlockVec blockvec_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const std::vector<TraceRecord>& trace);

/// Full result object: status, scalings, steps, residual, min_eig,
/// lambda_threshold, the solution blocks when feasible, and the trace when
/// it was recorded.
nlohmann::json result_to_json(const SolveResult& result);

/// One-line verdict plus the solution blocks in readable form.
std::string result_to_text(const SolveResult& result);

nlohmann::json oracle_to_json(const GeneratedInstance& instance);

/// Reads a solution tuple from either a bare blockvec object or a result
/// object holding one under "x".
BlockVec solution_from_json(const nlohmann::json& j);

std::string status_name(SolveStatus status);

}  // namespace sdfp
