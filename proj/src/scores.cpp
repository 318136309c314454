#include "theta_guide/scores.hpp"

#include <algorithm>
#include <stdexcept>

namespace theta_guide {

ThetaScores extract_scores(const SdpSolution& sol, const SdpProblem& p) {
  if (p.labels.formulation != Formulation::theta3) {
    throw std::invalid_argument("extract_scores needs a problem built by build_theta3");
  }
  if (sol.status == SdpStatus::numerical_failure) {
    throw std::invalid_argument("extract_scores: solve failed (" + sol.diagnostic + ")");
  }
  ThetaScores out;
  out.theta = sol.primal_value;
  out.bound = sol.dual_value;
  for (int idx : p.labels.diagonal_index) {
    const double raw = sol.primal_value * sol.x(idx, idx);
    out.raw_score.push_back(raw);
    out.score.push_back(std::clamp(raw, 0.0, 1.0));
  }
  return out;
}

ThetaResult compute_theta(const Graph& g, const SolverOptions& options) {
  ThetaResult r;
  r.problem = build_theta3(g);
  r.solution = solve(r.problem, options);
  if (r.solution.status != SdpStatus::numerical_failure) r.scores = extract_scores(r.solution, r.problem);
  return r;
}

}  // namespace theta_guide
