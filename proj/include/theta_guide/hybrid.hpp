#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "theta_guide/graph.hpp"
#include "theta_guide/ipm.hpp"
#include "theta_guide/report.hpp"
#include "theta_guide/search.hpp"

namespace theta_guide {

struct SolveConfig {
  Method method = Method::sdp_cp;
  std::optional<int> max_discrepancy;  // empty: no limit
  double time_limit = 1000.0;          // seconds, covers SDP and search
  std::uint64_t seed = 0;
  HeuristicRule rule = HeuristicRule::toward_one;
  SolverOptions sdp;
  std::string instance;
};

/// Depth-first search without any relaxation.
SearchReport solve_cp(const Graph& g, const SolveConfig& config);

/// theta3 relaxation, scores, dives, then LDS bounded by the dual value.
/// If the SDP does not converge the run falls back to solve_cp and is
/// flagged degraded.
SearchReport solve_hybrid(const Graph& g, const SolveConfig& config);

/// Only the relaxation; alpha_found stays empty.
SearchReport solve_theta(const Graph& g, const SolveConfig& config);

/// Dispatches on config.method.
SearchReport solve_instance(const Graph& g, const SolveConfig& config);

/// Process exit code for a finished run: 0 optimal, 2 time_limit, 3 degraded.
int exit_code(const SearchReport& r);

}  // namespace theta_guide
