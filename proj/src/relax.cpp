#include "theta_guide/relax.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace theta_guide {

double trace_product(const SdpConstraint& c, const Matrix& x) {
  double s = 0.0;
  for (const auto& e : c.entries) s += (e.row == e.col ? 1.0 : 2.0) * e.value * x(e.row, e.col);
  return s;
}

double frobenius_norm(const SdpConstraint& c) {
  double s = 0.0;
  for (const auto& e : c.entries) s += (e.row == e.col ? 1.0 : 2.0) * e.value * e.value;
  return std::sqrt(s);
}

int SdpProblem::inequality_count() const {
  int k = 0;
  for (const auto& c : constraints) k += c.sense == Sense::less_equal ? 1 : 0;
  return k;
}

void validate(const SdpProblem& p) {
  if (p.dim < 1) throw std::invalid_argument("SDP dimension must be positive");
  if (p.cost.rows() != p.dim || p.cost.cols() != p.dim) throw std::invalid_argument("cost matrix has wrong shape");
  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    for (const auto& e : p.constraints[j].entries) {
      if (e.row < 0 || e.col < e.row || e.col >= p.dim) {
        throw std::invalid_argument("constraint " + std::to_string(j) + " has an entry outside the upper triangle");
      }
    }
  }
}

BinarizedModel binarize(const std::vector<std::vector<int>>& domains) {
  BinarizedModel out;
  for (std::size_t i = 0; i < domains.size(); ++i) {
    if (domains[i].empty()) throw std::invalid_argument("domain of variable " + std::to_string(i) + " is empty");
    for (int value : domains[i]) out.channel.emplace_back(static_cast<int>(i), value);
  }
  const int total = static_cast<int>(out.channel.size());
  out.model.variable_count = total;
  out.model.objective.assign(static_cast<std::size_t>(total), 0.0);
  int offset = 0;
  for (const auto& dom : domains) {
    LinearRow row;
    row.coefficients.assign(static_cast<std::size_t>(total), 0.0);
    for (std::size_t k = 0; k < dom.size(); ++k) row.coefficients[static_cast<std::size_t>(offset) + k] = 1.0;
    row.sense = Sense::equal;
    row.rhs = 1.0;
    out.model.rows.push_back(std::move(row));
    offset += static_cast<int>(dom.size());
  }
  return out;
}

BinaryModel stable_set_model(const Graph& g) {
  BinaryModel model;
  const int n = g.vertex_count();
  model.variable_count = n;
  model.objective = g.weights();
  for (const Edge& e : g.edges()) {
    LinearRow row;
    row.coefficients.assign(static_cast<std::size_t>(n), 0.0);
    row.coefficients[static_cast<std::size_t>(e.u)] = 1.0;
    row.coefficients[static_cast<std::size_t>(e.v)] = 1.0;
    row.sense = Sense::less_equal;
    row.rhs = 1.0;
    model.rows.push_back(std::move(row));
  }
  return model;
}

namespace {

SdpConstraint pin_corner() { return {{{0, 0, 1.0}}, Sense::equal, 1.0}; }

// X_ii - X_0i = 0
SdpConstraint diagonal_link(int i) { return {{{i, i, 1.0}, {0, i, -0.5}}, Sense::equal, 0.0}; }

// X_ij = 0
SdpConstraint zero_entry(int i, int j) {
  if (i > j) std::swap(i, j);
  return {{{i, j, 0.5}}, Sense::equal, 0.0};
}

}  // namespace

SdpProblem lift(const BinaryModel& model) {
  const int n = model.variable_count;
  SdpProblem p;
  p.dim = n + 1;
  p.cost = Matrix(n + 1, n + 1);
  for (int i = 0; i < n; ++i) p.cost(i + 1, i + 1) = model.objective.at(static_cast<std::size_t>(i));
  p.constraints.push_back(pin_corner());
  for (int i = 1; i <= n; ++i) p.constraints.push_back(diagonal_link(i));
  for (const auto& row : model.rows) {
    if (static_cast<int>(row.coefficients.size()) != n) throw std::invalid_argument("row length differs from N");
    SdpConstraint c;
    c.sense = row.sense;
    c.rhs = row.rhs;
    // a^T d written as sum a_i (X_ii + X_0i) / 2
    for (int i = 0; i < n; ++i) {
      const double a = row.coefficients[static_cast<std::size_t>(i)];
      if (a == 0.0) continue;
      c.entries.push_back({i + 1, i + 1, 0.5 * a});
      c.entries.push_back({0, i + 1, 0.25 * a});
    }
    p.constraints.push_back(std::move(c));
  }
  p.labels.formulation = Formulation::lifted;
  for (int i = 0; i < n; ++i) p.labels.diagonal_index.push_back(i + 1);
  return p;
}

SdpProblem build_theta1(const Graph& g) {
  const int n = g.vertex_count();
  SdpProblem p;
  p.dim = n + 1;
  p.cost = Matrix(n + 1, n + 1);
  for (int i = 0; i < n; ++i) p.cost(i + 1, i + 1) = g.weight(i);
  p.constraints.push_back(pin_corner());
  for (int i = 1; i <= n; ++i) p.constraints.push_back(diagonal_link(i));
  for (const Edge& e : g.edges()) p.constraints.push_back(zero_entry(e.u + 1, e.v + 1));
  p.labels.formulation = Formulation::theta1;
  for (int i = 0; i < n; ++i) p.labels.diagonal_index.push_back(i + 1);
  return p;
}

SdpProblem build_theta3(const Graph& g) {
  const int n = g.vertex_count();
  for (double w : g.weights()) {
    if (w < 0.0) throw std::invalid_argument("theta3 needs nonnegative weights");
  }
  SdpProblem p;
  p.dim = n;
  p.cost = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) p.cost(i, j) = std::sqrt(g.weight(i) * g.weight(j));
  }
  SdpConstraint trace_one{{}, Sense::equal, 1.0};
  for (int i = 0; i < n; ++i) trace_one.entries.push_back({i, i, 1.0});
  p.constraints.push_back(std::move(trace_one));
  for (const Edge& e : g.edges()) p.constraints.push_back(zero_entry(e.u, e.v));
  p.labels.formulation = Formulation::theta3;
  for (int i = 0; i < n; ++i) p.labels.diagonal_index.push_back(i);
  return p;
}

void write_sdpa(std::ostream& out, const SdpProblem& p) {
  validate(p);
  const int slacks = p.inequality_count();
  const auto old_precision = out.precision(17);
  out << "* max tr(F0 Y) s.t. tr(Fi Y) = ci, Y psd\n";
  out << p.constraints.size() << '\n';
  out << (slacks > 0 ? 2 : 1) << '\n';
  out << p.dim;
  if (slacks > 0) out << ' ' << -slacks;
  out << '\n';
  for (std::size_t j = 0; j < p.constraints.size(); ++j) out << (j ? " " : "") << p.constraints[j].rhs;
  out << '\n';
  for (int r = 0; r < p.dim; ++r) {
    for (int c = r; c < p.dim; ++c) {
      if (p.cost(r, c) != 0.0) out << "0 1 " << r + 1 << ' ' << c + 1 << ' ' << p.cost(r, c) << '\n';
    }
  }
  int slack = 0;
  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    const auto& con = p.constraints[j];
    for (const auto& e : con.entries) {
      out << j + 1 << " 1 " << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value << '\n';
    }
    if (con.sense == Sense::less_equal) {
      ++slack;
      out << j + 1 << " 2 " << slack << ' ' << slack << " 1\n";
    }
  }
  out.precision(old_precision);
}

}  // namespace theta_guide
