#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "theta_guide/graph.hpp"
#include "theta_guide/ipm.hpp"
#include "theta_guide/relax.hpp"
#include "theta_guide/scores.hpp"
#include "theta_guide/simd.hpp"

using namespace theta_guide;

namespace {

Graph complete(int n, std::vector<double> w = {}) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e, std::move(w));
}

Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

double eigen_min(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(e, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

void check_certificate(const SdpProblem& p, const SdpSolution& s) {
  REQUIRE(s.status == SdpStatus::optimal);
  const auto c = certify(p, s);
  CHECK(c.relative_gap <= 1e-6);
  CHECK(c.relative_gap >= -1e-9);
  CHECK(c.max_primal_residual <= 1e-7);
  CHECK(c.min_eig_x >= -1e-7);
  CHECK(c.min_eig_z >= -1e-7);
  CHECK(eigen_min(s.x) >= -1e-7);
  CHECK(eigen_min(s.z) >= -1e-7);
  CHECK(c.min_eig_x == doctest::Approx(eigen_min(s.x)).epsilon(1e-6).scale(1.0));
}

}  // namespace

TEST_CASE("one-dimensional problems") {
  SdpProblem p;
  p.dim = 1;
  p.cost = Matrix(1, 1, 3.0);
  p.constraints.push_back({{{0, 0, 1.0}}, Sense::equal, 1.0});
  auto s = solve(p);
  REQUIRE(s.status == SdpStatus::optimal);
  CHECK(s.primal_value == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(s.dual_value == doctest::Approx(3.0).epsilon(1e-6));

  p.constraints[0].sense = Sense::less_equal;
  p.constraints[0].rhs = 2.0;
  s = solve(p);
  REQUIRE(s.status == SdpStatus::optimal);
  CHECK(s.primal_value == doctest::Approx(6.0).epsilon(1e-6));
  REQUIRE(s.slack.size() == 1);
  CHECK(std::abs(s.slack[0]) < 1e-5);
  check_certificate(p, s);
}

TEST_CASE("analytic theta values") {
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(std::abs(solve(build_theta3(Graph(n, {}))).primal_value - n) <= 1e-5);
    CHECK(std::abs(solve(build_theta3(complete(n))).primal_value - 1.0) <= 1e-5);
  }
  CHECK(std::abs(solve(build_theta3(complete(5, {1, 2, 3, 4, 5}))).primal_value - 5.0) <= 1e-5);
  CHECK(std::abs(solve(build_theta3(c5())).primal_value - std::sqrt(5.0)) <= 1e-4);
}

TEST_CASE("linearly dependent constraints are reported") {
  auto p = build_theta3(c5());
  p.constraints.push_back(p.constraints[1]);
  const auto s = solve(p);
  CHECK(s.status == SdpStatus::numerical_failure);
  CHECK(s.diagnostic.find("linearly dependent") != std::string::npos);
}

TEST_CASE("iteration limit is honest") {
  SolverOptions o;
  o.max_iterations = 2;
  const auto s = solve(build_theta3(c5()), o);
  CHECK(s.status == SdpStatus::max_iterations);
  CHECK(s.iterations == 2);
  CHECK_FALSE(s.diagnostic.empty());
}

TEST_CASE("trace reports every iteration and the final point satisfies weak duality") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto p = build_theta3(random_graph(15, 0.1 * static_cast<double>(seed + 1), seed % 2 == 1, seed));
    std::vector<IterationInfo> rows;
    SolverOptions o;
    o.trace = [&](const IterationInfo& i) { rows.push_back(i); };
    const auto s = solve(p, o);
    REQUIRE(s.status == SdpStatus::optimal);
    REQUIRE(rows.size() == static_cast<std::size_t>(s.iterations + 1));
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].iteration == static_cast<int>(i));
    CHECK(rows.back().relative_gap <= 1e-6);
    CHECK(s.dual_value >= s.primal_value - 1e-9 * (1.0 + std::abs(s.primal_value)));
    CHECK(s.iterations <= 50);
  }
}

TEST_CASE("solves are deterministic") {
  const auto p = build_theta3(random_graph(18, 0.3, true, 9));
  const auto a = solve(p);
  const auto b = solve(p);
  CHECK(a.primal_value == b.primal_value);
  CHECK(a.dual_value == b.dual_value);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("every kernel set produces the same solution") {
  const auto before = simd::active_isa();
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto p = build_theta3(random_graph(20, 0.2 + 0.2 * static_cast<double>(seed), seed % 2 == 0, seed));
    simd::set_active_isa(simd::Isa::scalar);
    const auto ref = solve(p);
    for (auto isa : simd::available_isas()) {
      CAPTURE(simd::to_string(isa));
      simd::set_active_isa(isa);
      const auto s = solve(p);
      CHECK(s.status == ref.status);
      CHECK(std::abs(s.primal_value - ref.primal_value) <= 1e-9 * (1.0 + std::abs(ref.primal_value)));
      CHECK(std::abs(s.dual_value - ref.dual_value) <= 1e-9 * (1.0 + std::abs(ref.dual_value)));
    }
  }
  simd::set_active_isa(before);
}

TEST_CASE("certificates on random theta problems") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto g = random_graph(8 + static_cast<int>(seed), 0.05 + 0.08 * static_cast<double>(seed), seed % 3 == 0, seed);
    const auto p = build_theta3(g);
    check_certificate(p, solve(p));
    const auto p1 = build_theta1(g);
    check_certificate(p1, solve(p1));
  }
}

TEST_CASE("sandwich and range on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 5 + static_cast<int>(seed % 16);
    const auto g = random_graph(n, 0.05 + 0.03 * static_cast<double>(seed), seed % 2 == 0, 500 + seed);
    const auto s = solve(build_theta3(g));
    REQUIRE(s.status == SdpStatus::optimal);
    const double alpha = brute_force_alpha(g).value;
    double max_w = 0.0;
    for (double w : g.weights()) max_w = std::max(max_w, w);
    CHECK(alpha <= s.dual_value + 1e-5 * (1.0 + alpha));
    CHECK(s.primal_value <= n * max_w * (1.0 + 1e-5));
  }
}

TEST_CASE("theta1 and theta3 agree") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_graph(4 + static_cast<int>(seed % 9), 0.1 * static_cast<double>(seed % 9 + 1), seed % 2 == 1, 40 + seed);
    const double t1 = solve(build_theta1(g)).primal_value;
    const double t3 = solve(build_theta3(g)).primal_value;
    CHECK(std::abs(t1 - t3) <= 1e-5 * (1.0 + t3));
  }
}

TEST_CASE("scores") {
  const auto empty = compute_theta(Graph(4, {}));
  REQUIRE(empty.scores.score.size() == 4);
  for (double s : empty.scores.score) CHECK(std::abs(s - 1.0) <= 1e-4);

  const auto k2 = compute_theta(Graph(2, {{0, 1}}));
  CHECK(std::abs(k2.scores.raw_score[0] + k2.scores.raw_score[1] - 1.0) <= 1e-4);

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto g = random_graph(14, 0.15 * static_cast<double>(seed + 1), seed % 2 == 0, seed);
    const auto t = compute_theta(g);
    double sum = 0.0;
    for (double r : t.scores.raw_score) sum += r;
    CHECK(std::abs(sum - t.scores.theta) <= 14 * 1e-4);
    for (double s : t.scores.score) {
      CHECK(s >= 0.0);
      CHECK(s <= 1.0);
    }
    double max_w = 0.0;
    for (double w : g.weights()) max_w = std::max(max_w, w);
    CHECK(t.scores.theta >= max_w - 1e-5);
    CHECK(t.scores.bound >= t.scores.theta - 1e-6 * (1.0 + t.scores.theta));
  }

  const auto p1 = build_theta1(c5());
  CHECK_THROWS_AS(extract_scores(solve(p1), p1), std::invalid_argument);
}
