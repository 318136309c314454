#pragma once

#include <functional>
#include <string>
#include <vector>

#include "theta_guide/linalg.hpp"
#include "theta_guide/relax.hpp"

namespace theta_guide {

enum class SdpStatus { optimal, max_iterations, numerical_failure };

std::string to_string(SdpStatus s);

/// One row of the per-iteration trace.
struct IterationInfo {
  int iteration = 0;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double relative_gap = 0.0;
  double primal_infeasibility = 0.0;  // max_j |b_j - tr(A_j X) - s_j| / (1 + |b_j|)
  double dual_infeasibility = 0.0;    // max |C - A^T y + Z| / (1 + max|C|)
  double mu = 0.0;
  double primal_step = 0.0;
  double dual_step = 0.0;
};

enum class StartPoint {
  uniform,  // X = Z = tau I, tau = 1 + max|b_j| + max ||A_j||_F
  scaled,   // X and Z scaled separately from the data, as in CSDP
};

struct SolverOptions {
  StartPoint start = StartPoint::scaled;
  double gap_tolerance = 1e-6;
  double feasibility_tolerance = 1e-7;
  int max_iterations = 100;
  double step_fraction = 0.98;
  /// Called once per iteration before the convergence test.
  std::function<void(const IterationInfo&)> trace;
};

/// Primal X, dual (y, Z) and the slack pair of the inequality block.
/// Maximization: primal_value = tr(C X) <= dual_value = b^T y at
/// feasible points.
struct SdpSolution {
  Matrix x;
  std::vector<double> y;
  Matrix z;
  std::vector<double> slack;       // primal slacks of the <= rows, in constraint order
  std::vector<double> slack_dual;  // matching dual slacks
  double primal_value = 0.0;
  double dual_value = 0.0;
  int iterations = 0;
  SdpStatus status = SdpStatus::numerical_failure;
  std::string diagnostic;
};

/// Primal-dual path-following interior-point method with the HKM direction
/// and Mehrotra predictor-corrector steps. Each iteration factors the dense
/// Schur complement M_pq = tr(A_p X A_q Z^-1) by Cholesky; linearly
/// dependent constraints make that factorization collapse and are reported
/// as numerical_failure.
SdpSolution solve(const SdpProblem& p, const SolverOptions& options = {});

/// Independent check of a returned solution.
struct Certificate {
  double relative_gap = 0.0;
  double max_primal_residual = 0.0;  // max_j violation / (1 + |b_j|)
  double dual_residual = 0.0;        // max entry of |C - A^T y + Z|
  double min_eig_x = 0.0;
  double min_eig_z = 0.0;
  double min_slack = 0.0;
  double min_slack_dual = 0.0;
};

Certificate certify(const SdpProblem& p, const SdpSolution& s);

/// (dual - primal) / (1 + |primal|)
double relative_gap(double primal_value, double dual_value);

}  // namespace theta_guide
