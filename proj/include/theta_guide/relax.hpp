#pragma once

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "theta_guide/graph.hpp"
#include "theta_guide/linalg.hpp"

namespace theta_guide {

enum class Sense { less_equal, equal };

/// One entry of a symmetric matrix: sets A(row,col) and A(col,row) to
/// `value`. Always stored with row <= col.
struct MatrixEntry {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

/// tr(A X) <= rhs or tr(A X) = rhs, with A kept as an entry list.
struct SdpConstraint {
  std::vector<MatrixEntry> entries;
  Sense sense = Sense::equal;
  double rhs = 0.0;
};

/// tr(A X) for a symmetric X.
double trace_product(const SdpConstraint& c, const Matrix& x);
/// Frobenius norm of the symmetric matrix described by the entry list.
double frobenius_norm(const SdpConstraint& c);

enum class Formulation { generic, theta1, theta3, lifted };

/// Where each model variable lives on the diagonal of X.
struct LabelMap {
  Formulation formulation = Formulation::generic;
  std::vector<int> diagonal_index;  // model variable -> row/column of X
};

/// maximize tr(C X) subject to the constraints and X positive semidefinite.
struct SdpProblem {
  int dim = 0;
  Matrix cost;
  std::vector<SdpConstraint> constraints;
  LabelMap labels;

  int inequality_count() const;
};

/// Throws std::invalid_argument when an entry lies outside the matrix or
/// the cost matrix has the wrong shape.
void validate(const SdpProblem& p);

struct LinearRow {
  std::vector<double> coefficients;
  Sense sense = Sense::less_equal;
  double rhs = 0.0;
};

/// Binary variables d_1..d_N with linear rows and a linear objective.
struct BinaryModel {
  int variable_count = 0;
  std::vector<LinearRow> rows;
  std::vector<double> objective;
};

/// Binary index -> (original variable, domain value).
using ChannelMap = std::vector<std::pair<int, int>>;

struct BinarizedModel {
  BinaryModel model;
  ChannelMap channel;
};

/// x_ij = 1 iff v_i = j: one binary per (variable, value) pair and an
/// exactly-one row per original variable. The objective is left at zero.
BinarizedModel binarize(const std::vector<std::vector<int>>& domains);

/// The stable set ILP on g: objective w, one row x_i + x_j <= 1 per edge.
BinaryModel stable_set_model(const Graph& g);

/// Lifts a binary model to an (N+1)x(N+1) SDP with X_00 = 1 and
/// X_ii = X_0i for every variable; linear rows act on the diagonal and the
/// border of X.
SdpProblem lift(const BinaryModel& model);

/// max tr(W X), X_ii = X_0i, X_ij = 0 on edges, X_00 = 1; dimension n+1.
SdpProblem build_theta1(const Graph& g);

/// max tr(U X), tr(X) = 1, X_ij = 0 on edges, U_ij = sqrt(w_i w_j);
/// dimension n with m+1 constraints.
SdpProblem build_theta3(const Graph& g);

/// Sparse SDPA text format (the SDPA "dual" form max tr(F0 Y) s.t.
/// tr(F_i Y) = c_i): F0 is the cost, F_i the constraint matrices, c the
/// right-hand sides. Inequalities get a slack in a trailing LP block.
void write_sdpa(std::ostream& out, const SdpProblem& p);

}  // namespace theta_guide
