// SPDX-License-Identifier: Apache-2.0
#include "sdfp/result_io.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

namespace sdfp {

namespace {

using nlohmann::json;

json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

const char* event_name(TraceEvent event) {
  switch (event) {
    case TraceEvent::Step:
      return "step";
    case TraceEvent::Scaling:
      return "scaling";
    case TraceEvent::Found:
      return "found";
  }
  return "unknown";
}

}  // namespace

std::string status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Feasible:
      return "feasible";
    case SolveStatus::InfeasibleAtLevel:
      return "infeasible_at_level";
    case SolveStatus::BudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

nlohmann::json blockvec_to_json(const BlockVec& x) {
  json blocks = json::array();
  for (int s = 0; s < x.block_count(); ++s) {
    const Eigen::MatrixXd& b = x.block(s);
    json rows = json::array();
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < b.cols(); ++j) row.push_back(b(i, j));
      rows.push_back(std::move(row));
    }
    blocks.push_back(std::move(rows));
  }
  return json{{"sizes", x.structure().sizes()}, {"blocks", std::move(blocks)}};
}

BlockVec blockvec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sizes") || !j.contains("blocks")) {
    throw Error("blockvec json needs 'sizes' and 'blocks'");
  }
  const std::vector<int> sizes = j.at("sizes").get<std::vector<int>>();
  const BlockStructure structure(sizes);
  const json& blocks = j.at("blocks");
  if (!blocks.is_array() || static_cast<int>(blocks.size()) != structure.block_count()) {
    throw Error("blockvec json block count mismatch");
  }
  std::vector<Eigen::MatrixXd> out;
  out.reserve(blocks.size());
  for (int s = 0; s < structure.block_count(); ++s) {
    const json& rows = blocks[static_cast<std::size_t>(s)];
    const int n = structure.size(s);
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw Error("blockvec json block " + std::to_string(s) + " has wrong row count");
    }
    Eigen::MatrixXd b(n, n);
    for (int i = 0; i < n; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw Error("blockvec json block " + std::to_string(s) + " has wrong column count");
      }
      for (int jj = 0; jj < n; ++jj) b(i, jj) = row[static_cast<std::size_t>(jj)].get<double>();
    }
    out.push_back(std::move(b));
  }
  return BlockVec(structure, std::move(out));
}

nlohmann::json trace_to_json(const std::vector<TraceRecord>& trace) {
  json arr = json::array();
  for (const TraceRecord& rec : trace) {
    json entry{{"step_index", rec.step_index},
               {"k", rec.k},
               {"norm_py", finite_or_null(rec.norm_py)},
               {"inv_sq_norm", finite_or_null(rec.inv_sq_norm)},
               {"event", event_name(rec.event)}};
    if (rec.log_potential_of_py_pullback) {
      entry["log_potential"] = finite_or_null(*rec.log_potential_of_py_pullback);
    }
    if (rec.cond_estimate) {
      entry["cond_estimate"] = finite_or_null(*rec.cond_estimate);
    }
    arr.push_back(std::move(entry));
  }
  return arr;
}

nlohmann::json result_to_json(const SolveResult& result) {
  json out{{"status", status_name(result.status)},
           {"scalings", result.scalings_used},
           {"basic_steps", result.basic_steps_used},
           {"residual", finite_or_null(result.residual)},
           {"min_eig", finite_or_null(result.min_eig)},
           {"lambda_threshold", result.lambda_threshold}};
  if (result.x) {
    out["x"] = blockvec_to_json(*result.x);
  }
  if (!result.trace.empty()) {
    out["trace"] = trace_to_json(result.trace);
  }
  return out;
}

std::string result_to_text(const SolveResult& result) {
  std::ostringstream out;
  out << status_name(result.status) << "  scalings=" << result.scalings_used
      << " steps=" << result.basic_steps_used;
  if (result.status == SolveStatus::Feasible) {
    out << " residual=" << result.residual << " min_eig=" << result.min_eig;
  } else if (result.status == SolveStatus::InfeasibleAtLevel) {
    out << " lambda_threshold=" << result.lambda_threshold;
  }
  out << '\n';
  if (result.x) {
    for (int s = 0; s < result.x->block_count(); ++s) {
      out << "block " << (s + 1) << ":\n" << result.x->block(s) << '\n';
    }
  }
  return out.str();
}

nlohmann::json oracle_to_json(const GeneratedInstance& instance) {
  json out;
  if (instance.planted) {
    out["kind"] = "planted_feasible";
    out["x_star"] = blockvec_to_json(*instance.planted);
  } else if (instance.certificate) {
    out["kind"] = "certified_infeasible";
    json weights = json::array();
    for (Eigen::Index i = 0; i < instance.certificate->weights.size(); ++i) {
      weights.push_back(instance.certificate->weights[i]);
    }
    out["weights"] = std::move(weights);
    out["combination"] = blockvec_to_json(instance.certificate->combination);
  }
  return out;
}

BlockVec solution_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("x")) {
    return blockvec_from_json(j.at("x"));
  }
  if (j.is_object() && j.contains("x_star")) {
    return blockvec_from_json(j.at("x_star"));
  }
  return blockvec_from_json(j);
}

}  // namespace sdfp
