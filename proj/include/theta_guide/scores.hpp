#pragma once

#include <vector>

#include "theta_guide/graph.hpp"
#include "theta_guide/ipm.hpp"
#include "theta_guide/relax.hpp"

namespace theta_guide {

/// Per-vertex guidance extracted from the theta3 optimum: score_i is
/// theta * X_ii clamped to [0, 1]. `bound` is the dual objective, which is
/// what the search uses to cap the incumbent.
struct ThetaScores {
  double theta = 0.0;
  double bound = 0.0;
  std::vector<double> score;
  std::vector<double> raw_score;  // before clamping; sums to theta
};

/// Throws std::invalid_argument unless `p` was built by build_theta3 and the
/// solve produced a usable point (optimal or max_iterations).
ThetaScores extract_scores(const SdpSolution& sol, const SdpProblem& p);

struct ThetaResult {
  SdpProblem problem;
  SdpSolution solution;
  ThetaScores scores;  // empty when the solve failed
};

/// build_theta3, solve and extract_scores in one call.
ThetaResult compute_theta(const Graph& g, const SolverOptions& options = {});

}  // namespace theta_guide
