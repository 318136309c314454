#include "theta_guide/ipm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "theta_guide/simd.hpp"

namespace theta_guide {

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::optimal:
      return "optimal";
    case SdpStatus::max_iterations:
      return "max_iterations";
    case SdpStatus::numerical_failure:
      return "numerical_failure";
  }
  return "unknown";
}

double relative_gap(double primal_value, double dual_value) {
  return (dual_value - primal_value) / (1.0 + std::abs(primal_value));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Entry (a, b, v) of a symmetric matrix, with both orientations of each
// off-diagonal entry listed.
struct FullEntry {
  int a;
  int b;
  double v;
};

class Workspace {
 public:
  explicit Workspace(const SdpProblem& p) : n_(p.dim), m_(static_cast<int>(p.constraints.size())) {
    full_.resize(static_cast<std::size_t>(m_));
    slack_of_.assign(static_cast<std::size_t>(m_), -1);
    for (int j = 0; j < m_; ++j) {
      const auto& con = p.constraints[static_cast<std::size_t>(j)];
      for (const auto& e : con.entries) {
        full_[static_cast<std::size_t>(j)].push_back({e.row, e.col, e.value});
        if (e.row != e.col) full_[static_cast<std::size_t>(j)].push_back({e.col, e.row, e.value});
      }
      if (con.sense == Sense::less_equal) {
        slack_of_[static_cast<std::size_t>(j)] = static_cast<int>(slack_rows_.size());
        slack_rows_.push_back(j);
      }
    }
    k_ = static_cast<int>(slack_rows_.size());
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int k() const { return k_; }
  const std::vector<int>& slack_rows() const { return slack_rows_; }
  int slack_of(int j) const { return slack_of_[static_cast<std::size_t>(j)]; }

  // A(G)_j = tr(A_j G) for possibly non-symmetric G.
  std::vector<double> apply(const Matrix& g) const {
    std::vector<double> out(static_cast<std::size_t>(m_), 0.0);
    for (int j = 0; j < m_; ++j) {
      double s = 0.0;
      for (const auto& f : full_[static_cast<std::size_t>(j)]) s += f.v * g(f.b, f.a);
      out[static_cast<std::size_t>(j)] = s;
    }
    return out;
  }

  // sum_j y_j A_j
  Matrix adjoint(const std::vector<double>& y) const {
    Matrix s(n_, n_);
    for (int j = 0; j < m_; ++j) {
      const double yj = y[static_cast<std::size_t>(j)];
      if (yj == 0.0) continue;
      for (const auto& f : full_[static_cast<std::size_t>(j)]) s(f.a, f.b) += yj * f.v;
    }
    return s;
  }

  // G_pq = <A_p, A_q>, plus 1 on the diagonal of rows with a slack: the
  // Gram matrix of the constraint operator including the slack block.
  Matrix gram() const {
    std::vector<std::vector<std::pair<int, double>>> at(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (int j = 0; j < m_; ++j) {
      for (const auto& f : full_[static_cast<std::size_t>(j)]) {
        at[static_cast<std::size_t>(f.a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(f.b)].push_back({j, f.v});
      }
    }
    Matrix g(m_, m_);
    for (const auto& cell : at) {
      for (const auto& [p, vp] : cell) {
        for (const auto& [q, vq] : cell) g(p, q) += vp * vq;
      }
    }
    for (int j : slack_rows_) g(j, j) += 1.0;
    return g;
  }

  // M_pq = tr(A_p X A_q Zi) = sum over entries v_p v_q X(b,c) Zi(d,a)
  void schur(const Matrix& x, const Matrix& zi, Matrix& out) const {
    if (out.rows() != m_) out = Matrix(m_, m_);
    for (int p = 0; p < m_; ++p) {
      const auto& fp = full_[static_cast<std::size_t>(p)];
      for (int q = p; q < m_; ++q) {
        const auto& fq = full_[static_cast<std::size_t>(q)];
        double s = 0.0;
        for (const auto& ep : fp) {
          for (const auto& eq : fq) s += ep.v * eq.v * x(ep.b, eq.a) * zi(eq.b, ep.a);
        }
        out(p, q) = s;
        out(q, p) = s;
      }
    }
  }

 private:
  int n_;
  int m_;
  int k_ = 0;
  std::vector<std::vector<FullEntry>> full_;
  std::vector<int> slack_rows_;
  std::vector<int> slack_of_;
};

// Largest alpha with L^-1 (X + alpha dX) L^-T psd, given L^-1.
double max_psd_step(const Matrix& linv, const Matrix& dx) {
  Matrix b = multiply_transposed(multiply(linv, dx), linv);
  b.symmetrize();
  const double lmin = min_eigenvalue(b);
  return lmin >= 0.0 ? kInf : -1.0 / lmin;
}

double max_positive_step(const std::vector<double>& v, const std::vector<double>& dv) {
  double alpha = kInf;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (dv[i] < 0.0) alpha = std::min(alpha, -v[i] / dv[i]);
  }
  return alpha;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return simd::dot(std::span<const double>(a), std::span<const double>(b));
}

struct Direction {
  Matrix dx;
  Matrix dz;
  std::vector<double> dy;
  std::vector<double> dxs;
  std::vector<double> dzs;
};

}  // namespace

SdpSolution solve(const SdpProblem& p, const SolverOptions& options) {
  validate(p);
  const Workspace ws(p);
  const int n = ws.n();
  const int m = ws.m();
  const int k = ws.k();
  const auto& c = p.cost;

  std::vector<double> b(static_cast<std::size_t>(m));
  double max_b = 0.0;
  double max_a = 0.0;
  for (int j = 0; j < m; ++j) {
    b[static_cast<std::size_t>(j)] = p.constraints[static_cast<std::size_t>(j)].rhs;
    max_b = std::max(max_b, std::abs(b[static_cast<std::size_t>(j)]));
    max_a = std::max(max_a, frobenius_norm(p.constraints[static_cast<std::size_t>(j)]));
  }
  const double c_scale = 1.0 + max_abs(c);

  SdpSolution sol;
  double x0 = 1.0 + max_b + max_a;
  double z0 = x0;
  if (options.start == StartPoint::scaled) {
    double alpha = 0.0;
    for (int j = 0; j < m; ++j) {
      const auto& con = p.constraints[static_cast<std::size_t>(j)];
      alpha = std::max(alpha, (1.0 + std::abs(con.rhs)) / (1.0 + frobenius_norm(con)));
    }
    const double beta = (1.0 + std::max(max_a, frobenius_norm(c))) / std::sqrt(static_cast<double>(n));
    x0 = 10.0 * static_cast<double>(n) * std::max(alpha, 1.0 / static_cast<double>(n));
    z0 = 10.0 * beta;
  }
  sol.x = Matrix::identity(n, x0);
  sol.z = Matrix::identity(n, z0);
  sol.y.assign(static_cast<std::size_t>(m), 0.0);
  sol.slack.assign(static_cast<std::size_t>(k), x0);
  sol.slack_dual.assign(static_cast<std::size_t>(k), z0);
  const double cone_size = static_cast<double>(n + k);

  auto fail = [&](std::string why) {
    sol.status = SdpStatus::numerical_failure;
    sol.diagnostic = std::move(why);
    return sol;
  };

  if (m > 0) {
    const Matrix g = ws.gram();
    double max_diag = 0.0;
    for (int j = 0; j < m; ++j) max_diag = std::max(max_diag, g(j, j));
    Matrix lg;
    if (!cholesky(g, lg, 1e-12 * std::max(1.0, max_diag))) {
      sol.status = SdpStatus::numerical_failure;
      sol.diagnostic = "constraint matrices are linearly dependent";
      return sol;
    }
  }

  Matrix lz;
  Matrix lx;
  Matrix schur;
  Matrix lm;
  double last_ap = 0.0;
  double last_ad = 0.0;
  for (int iter = 0;; ++iter) {
    auto& x = sol.x;
    auto& z = sol.z;
    auto& y = sol.y;
    auto& xs = sol.slack;
    auto& zs = sol.slack_dual;

    // residuals
    const std::vector<double> ax = ws.apply(x);
    std::vector<double> rp(static_cast<std::size_t>(m));
    double pinf = 0.0;
    for (int j = 0; j < m; ++j) {
      const int s = ws.slack_of(j);
      const double lhs = ax[static_cast<std::size_t>(j)] + (s >= 0 ? xs[static_cast<std::size_t>(s)] : 0.0);
      rp[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j)] - lhs;
      pinf = std::max(pinf, std::abs(rp[static_cast<std::size_t>(j)]) / (1.0 + std::abs(b[static_cast<std::size_t>(j)])));
    }
    Matrix rd = c;
    rd.add_scaled(-1.0, ws.adjoint(y));
    rd.add_scaled(1.0, z);
    std::vector<double> rds(static_cast<std::size_t>(k));
    double dinf = max_abs(rd);
    for (int s = 0; s < k; ++s) {
      const int j = ws.slack_rows()[static_cast<std::size_t>(s)];
      rds[static_cast<std::size_t>(s)] = -y[static_cast<std::size_t>(j)] + zs[static_cast<std::size_t>(s)];
      dinf = std::max(dinf, std::abs(rds[static_cast<std::size_t>(s)]));
    }
    dinf /= c_scale;

    sol.primal_value = frobenius_inner(c, x);
    sol.dual_value = dot(b, y);
    sol.iterations = iter;
    const double mu = (frobenius_inner(x, z) + dot(xs, zs)) / cone_size;
    const double gap = relative_gap(sol.primal_value, sol.dual_value);

    IterationInfo info{iter, sol.primal_value, sol.dual_value, gap, pinf, dinf, mu, last_ap, last_ad};
    if (options.trace) options.trace(info);

    if (std::abs(gap) <= options.gap_tolerance && pinf <= options.feasibility_tolerance &&
        dinf <= options.feasibility_tolerance) {
      sol.status = SdpStatus::optimal;
      return sol;
    }
    if (iter >= options.max_iterations) {
      sol.status = SdpStatus::max_iterations;
      sol.diagnostic = "iteration limit reached";
      return sol;
    }

    if (!cholesky(z, lz)) return fail("dual matrix Z lost definiteness");
    const Matrix lz_inv = lower_triangular_inverse(lz);
    Matrix zi = multiply(transpose(lz_inv), lz_inv);
    zi.symmetrize();
    if (!cholesky(x, lx)) return fail("primal matrix X lost definiteness");
    const Matrix lx_inv = lower_triangular_inverse(lx);

    ws.schur(x, zi, schur);
    double max_diag = 0.0;
    for (int s = 0; s < k; ++s) {
      const int j = ws.slack_rows()[static_cast<std::size_t>(s)];
      schur(j, j) += xs[static_cast<std::size_t>(s)] / zs[static_cast<std::size_t>(s)];
    }
    for (int j = 0; j < m; ++j) max_diag = std::max(max_diag, schur(j, j));
    // Near the optimum X and Z approach complementary low rank and M gets
    // badly conditioned. Escalating diagonal shifts keep the step usable;
    // the residual terms of the next iteration absorb the inexactness.
    bool factored = false;
    double shift = 0.0;
    for (double rel : {0.0, 1e-13, 1e-11, 1e-9, 1e-7}) {
      const double target = rel * max_diag;
      for (int j = 0; j < m; ++j) schur(j, j) += target - shift;
      shift = target;
      if (cholesky(schur, lm, 1e-15 * std::max(1.0, max_diag))) {
        factored = true;
        break;
      }
    }
    if (!factored) return fail("Schur complement is not positive definite beyond recovery");

    const Matrix x_rd_zi = multiply(multiply(x, rd), zi);

    // Solves for a direction with target sigma*mu and an optional
    // second-order correction from a previous (affine) direction.
    auto direction = [&](double sigma_mu, const Direction* corr) {
      Matrix g = zi;
      for (double& v : g.flat()) v *= sigma_mu;
      g.add_scaled(-1.0, x);
      g.add_scaled(1.0, x_rd_zi);
      Matrix corr_term;
      if (corr != nullptr) {
        corr_term = multiply(multiply(corr->dx, corr->dz), zi);
        g.add_scaled(-1.0, corr_term);
      }
      std::vector<double> gs(static_cast<std::size_t>(k));
      for (int s = 0; s < k; ++s) {
        const auto si = static_cast<std::size_t>(s);
        gs[si] = sigma_mu / zs[si] - xs[si] + xs[si] * rds[si] / zs[si];
        if (corr != nullptr) gs[si] -= corr->dxs[si] * corr->dzs[si] / zs[si];
      }
      std::vector<double> rhs = ws.apply(g);
      for (int j = 0; j < m; ++j) rhs[static_cast<std::size_t>(j)] -= rp[static_cast<std::size_t>(j)];
      for (int s = 0; s < k; ++s) {
        rhs[static_cast<std::size_t>(ws.slack_rows()[static_cast<std::size_t>(s)])] += gs[static_cast<std::size_t>(s)];
      }
      cholesky_solve(lm, rhs);

      Direction d;
      d.dy = std::move(rhs);
      d.dz = ws.adjoint(d.dy);
      d.dz.add_scaled(-1.0, rd);
      d.dzs.resize(static_cast<std::size_t>(k));
      d.dxs.resize(static_cast<std::size_t>(k));
      for (int s = 0; s < k; ++s) {
        const auto si = static_cast<std::size_t>(s);
        const int j = ws.slack_rows()[si];
        d.dzs[si] = d.dy[static_cast<std::size_t>(j)] - rds[si];
        d.dxs[si] = sigma_mu / zs[si] - xs[si] - xs[si] * d.dzs[si] / zs[si];
        if (corr != nullptr) d.dxs[si] -= corr->dxs[si] * corr->dzs[si] / zs[si];
      }
      d.dx = zi;
      for (double& v : d.dx.flat()) v *= sigma_mu;
      d.dx.add_scaled(-1.0, x);
      d.dx.add_scaled(-1.0, multiply(multiply(x, d.dz), zi));
      if (corr != nullptr) d.dx.add_scaled(-1.0, corr_term);
      d.dx.symmetrize();
      return d;
    };

    auto step_lengths = [&](const Direction& d) {
      const double ap = std::min(max_psd_step(lx_inv, d.dx), max_positive_step(xs, d.dxs));
      const double ad = std::min(max_psd_step(lz_inv, d.dz), max_positive_step(zs, d.dzs));
      return std::pair{ap, ad};
    };

    // predictor
    const Direction affine = direction(0.0, nullptr);
    auto [ap_aff, ad_aff] = step_lengths(affine);
    ap_aff = std::min(1.0, ap_aff);
    ad_aff = std::min(1.0, ad_aff);
    Matrix x_aff = x;
    x_aff.add_scaled(ap_aff, affine.dx);
    Matrix z_aff = z;
    z_aff.add_scaled(ad_aff, affine.dz);
    double mu_aff = frobenius_inner(x_aff, z_aff);
    for (int s = 0; s < k; ++s) {
      const auto si = static_cast<std::size_t>(s);
      mu_aff += (xs[si] + ap_aff * affine.dxs[si]) * (zs[si] + ad_aff * affine.dzs[si]);
    }
    mu_aff /= cone_size;
    const double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0);

    // corrector
    const Direction d = direction(sigma * mu, &affine);
    auto [ap, ad] = step_lengths(d);
    ap = std::min(1.0, options.step_fraction * ap);
    ad = std::min(1.0, options.step_fraction * ad);
    if (ap < 1e-12 && ad < 1e-12) return fail("step length collapsed");

    last_ap = ap;
    last_ad = ad;
    x.add_scaled(ap, d.dx);
    z.add_scaled(ad, d.dz);
    for (int j = 0; j < m; ++j) y[static_cast<std::size_t>(j)] += ad * d.dy[static_cast<std::size_t>(j)];
    for (int s = 0; s < k; ++s) {
      xs[static_cast<std::size_t>(s)] += ap * d.dxs[static_cast<std::size_t>(s)];
      zs[static_cast<std::size_t>(s)] += ad * d.dzs[static_cast<std::size_t>(s)];
    }
  }
}

Certificate certify(const SdpProblem& p, const SdpSolution& s) {
  Certificate cert;
  cert.relative_gap = relative_gap(s.primal_value, s.dual_value);
  Matrix aty(p.dim, p.dim);
  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    const auto& con = p.constraints[j];
    const double lhs = trace_product(con, s.x);
    double violation = 0.0;
    if (con.sense == Sense::equal) {
      violation = std::abs(lhs - con.rhs);
    } else {
      violation = std::max(0.0, lhs - con.rhs);
    }
    cert.max_primal_residual = std::max(cert.max_primal_residual, violation / (1.0 + std::abs(con.rhs)));
    for (const auto& e : con.entries) {
      aty(e.row, e.col) += s.y[j] * e.value;
      if (e.row != e.col) aty(e.col, e.row) += s.y[j] * e.value;
    }
  }
  Matrix rd = p.cost;
  rd.add_scaled(-1.0, aty);
  rd.add_scaled(1.0, s.z);
  cert.dual_residual = max_abs(rd);
  cert.min_eig_x = min_eigenvalue(s.x);
  cert.min_eig_z = min_eigenvalue(s.z);
  cert.min_slack = s.slack.empty() ? 0.0 : *std::min_element(s.slack.begin(), s.slack.end());
  cert.min_slack_dual = s.slack_dual.empty() ? 0.0 : *std::min_element(s.slack_dual.begin(), s.slack_dual.end());
  return cert;
}

}  // namespace theta_guide
