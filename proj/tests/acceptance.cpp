// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "theta_guide/graph.hpp"
#include "theta_guide/hybrid.hpp"
#include "theta_guide/ipm.hpp"
#include "theta_guide/relax.hpp"
#include "theta_guide/report.hpp"
#include "theta_guide/scores.hpp"
#include "theta_guide/search.hpp"

using namespace theta_guide;

namespace {

const std::string kData = THETA_GUIDE_TEST_DATA;

constexpr double kSandwichTol = 1e-5;
constexpr double kFormulationTol = 1e-5;
constexpr double kAnalyticTol = 1e-5;
constexpr double kC5Tol = 1e-4;
constexpr double kGapTol = 1e-6;
constexpr double kResidualTol = 1e-7;
constexpr double kEigTol = -1e-7;
constexpr double kOracleBudgetSeconds = 300.0;
constexpr double kDensityPeakMax = 0.35;

struct Dimacs {
  std::string name;
  int alpha;
};

const std::vector<Dimacs> kDimacs = {
    {"hamming6-2", 32}, {"hamming6-4", 4}, {"johnson8-2-4", 4}, {"johnson8-4-4", 14}, {"MANN_a9", 16},
};

Graph dimacs_graph(const std::string& name) {
  return complement(parse_dimacs_file(kData + "/" + name + ".clq").graph);
}

// Criterion 2 random graphs: n in 8..20, densities spread over 0.05..0.95.
Graph sandwich_graph(int i) {
  const int n = 8 + (i * 5) % 13;
  const double density = 0.05 + 0.9 * (i % 10) / 9.0;
  return random_graph(n, density, i % 3 == 0, 1000 + static_cast<std::uint64_t>(i));
}

// Criterion 3 random graphs: n in 5..15, half weighted.
Graph oracle_graph(int i) {
  const int n = 5 + i % 11;
  const double density = 0.1 + 0.8 * (i % 7) / 6.0;
  return random_graph(n, density, i % 2 == 1, 2000 + static_cast<std::uint64_t>(i));
}

int failures = 0;

// Certificate verdict from the criterion 2 solves, printed in order later.
bool cert_ok = false;
std::string cert_detail;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

SolveConfig exact_config(Method method, const std::string& name) {
  SolveConfig c;
  c.method = method;
  c.max_discrepancy = std::nullopt;
  c.time_limit = 1000.0;
  c.seed = 0;
  c.instance = name;
  return c;
}

std::vector<std::string> dimacs_json() {
  std::vector<std::string> out;
  for (const auto& d : kDimacs) {
    const SearchReport r = solve_instance(dimacs_graph(d.name), exact_config(Method::sdp_cp, d.name));
    out.push_back(to_json(r, JsonOptions{false, 2}));
  }
  return out;
}

std::vector<std::string> oracle_json() {
  std::vector<std::string> out;
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle_graph(i);
    for (Method m : {Method::cp, Method::sdp_cp}) {
      out.push_back(to_json(solve_instance(g, exact_config(m, "oracle" + std::to_string(i))), JsonOptions{false, 2}));
    }
  }
  return out;
}

void criterion1() {
  bool ok = true;
  std::string detail;
  for (const auto& d : kDimacs) {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchReport r = solve_instance(dimacs_graph(d.name), exact_config(Method::sdp_cp, d.name));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool hit = r.alpha_found && *r.alpha_found == d.alpha && r.proven && r.status == RunStatus::optimal;
    ok = ok && hit;
    detail += d.name + "=" + (r.alpha_found ? std::to_string(static_cast<long long>(*r.alpha_found)) : "none") +
              (r.proven ? "" : "?") + fmt("(%.2fs) ", secs);
  }
  report(1, ok, detail);
}

// Criterion 6 reuses these solves.
void criterion2() {
  int violations = 0;
  int cert_failures = 0;
  double worst_gap = 0.0;
  double worst_res = 0.0;
  double worst_eig = std::numeric_limits<double>::infinity();
  double worst_slack = std::numeric_limits<double>::infinity();
  auto check = [&](const Graph& g, double alpha) {
    const ThetaResult t = compute_theta(g);
    if (t.solution.status != SdpStatus::optimal) {
      ++violations;
      ++cert_failures;
      return;
    }
    if (alpha > t.scores.bound + kSandwichTol) ++violations;
    const Certificate c = certify(t.problem, t.solution);
    worst_gap = std::max(worst_gap, std::abs(c.relative_gap));
    worst_res = std::max(worst_res, c.max_primal_residual);
    worst_eig = std::min({worst_eig, c.min_eig_x, c.min_eig_z});
    if (!t.solution.slack.empty()) worst_slack = std::min({worst_slack, c.min_slack, c.min_slack_dual});
    if (std::abs(c.relative_gap) > kGapTol || c.max_primal_residual > kResidualTol || c.min_eig_x < kEigTol ||
        c.min_eig_z < kEigTol || c.min_slack < kEigTol || c.min_slack_dual < kEigTol) {
      ++cert_failures;
    }
  };
  // alpha of the 64-vertex instances is far beyond exhaustive enumeration;
  // their published optima (also proven by criterion 1) stand in.
  for (const auto& d : kDimacs) check(dimacs_graph(d.name), d.alpha);
  for (int i = 0; i < 30; ++i) {
    const Graph g = sandwich_graph(i);
    check(g, brute_force_alpha(g).value);
  }
  report(2, violations == 0, std::to_string(violations) + " violations on 35 graphs");
  cert_ok = cert_failures == 0;
  cert_detail = std::to_string(cert_failures) + " failures; worst gap " + fmt("%.2e residual %.2e min eig %.2e", worst_gap,
                                                                   worst_res, std::min(worst_eig, worst_slack));
}

void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const Deadline deadline(kOracleBudgetSeconds);
  int mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle_graph(i);
    const double brute = brute_force_alpha(g).value;
    const CpModel plain(g);
    const SearchResult dfs = dfs_search(plain, deadline);
    const ThetaResult t = compute_theta(g);
    const HeuristicPath path = compute_heuristic(plain, t.scores, HeuristicRule::toward_one, false, 0);
    const SearchResult lds = lds_search(plain, path, std::nullopt, deadline);
    if (!dfs.proven() || !lds.proven() || dfs.best.value != brute || lds.best.value != brute) ++mismatches;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(3, mismatches == 0 && secs <= kOracleBudgetSeconds,
         std::to_string(mismatches) + " mismatches on 50 graphs" + fmt(" in %.2fs", secs));
}

void criterion4() {
  double worst = 0.0;
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    const int n = 4 + i % 9;
    const Graph g = random_graph(n, 0.1 + 0.8 * (i % 5) / 4.0, i % 2 == 1, 3000 + static_cast<std::uint64_t>(i));
    const SdpSolution s1 = solve(build_theta1(g));
    const SdpSolution s3 = solve(build_theta3(g));
    if (s1.status != SdpStatus::optimal || s3.status != SdpStatus::optimal) {
      ok = false;
      continue;
    }
    const double diff = std::abs(s1.dual_value - s3.dual_value) / (1.0 + s3.dual_value);
    worst = std::max(worst, diff);
    if (diff > kFormulationTol) ok = false;
  }
  report(4, ok, fmt("worst relative difference %.2e on 20 graphs", worst));
}

void criterion5() {
  bool ok = true;
  double worst = 0.0;
  auto expect = [&](const Graph& g, double value, double tol) {
    const ThetaResult t = compute_theta(g);
    const double err = std::abs(t.scores.bound - value);
    worst = std::max(worst, err);
    if (t.solution.status != SdpStatus::optimal || err > tol) ok = false;
  };
  for (int n = 2; n <= 10; ++n) {
    expect(Graph(n, {}), n, kAnalyticTol);
    std::vector<Edge> clique;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) clique.push_back({u, v});
    }
    expect(Graph(n, clique), 1.0, kAnalyticTol);
    std::vector<double> w;
    for (int v = 0; v < n; ++v) w.push_back(1.0 + (v * 7) % n);
    expect(Graph(n, clique, w), *std::max_element(w.begin(), w.end()), kAnalyticTol);
  }
  expect(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}), std::sqrt(5.0), kC5Tol);
  report(5, ok, fmt("worst absolute error %.2e", worst));
}

void criterion7() {
  double peak_density = 0.0;
  double peak = -1.0;
  std::string curve;
  for (int step = 0; step < 10; ++step) {
    const double density = 0.05 + 0.1 * step;
    double total = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      SolveConfig c = exact_config(Method::cp, "");
      total += static_cast<double>(solve_cp(random_graph(40, density, false, seed), c).backtracks);
    }
    const double mean = total / 5.0;
    curve += fmt("%.2f:%.0f ", density, mean);
    if (mean > peak) {
      peak = mean;
      peak_density = density;
    }
  }
  report(7, peak_density <= kDensityPeakMax + 1e-9, fmt("peak at %.2f; ", peak_density) + curve);
}

void criterion8() {
  const double densities[] = {0.05, 0.10, 0.15};
  int worse = 0;
  std::string detail;
  for (int i = 0; i < 10; ++i) {
    const Graph g = random_graph(60, densities[i % 3], false, 4000 + static_cast<std::uint64_t>(i));
    SolveConfig c = exact_config(Method::cp, "");
    c.time_limit = 60.0;
    const SearchReport cp = solve_instance(g, c);
    c.method = Method::sdp_cp;
    const SearchReport hy = solve_instance(g, c);
    const double a = cp.alpha_found.value_or(0.0);
    const double b = hy.alpha_found.value_or(0.0);
    if (b < a) ++worse;
    detail += fmt("%.0f/%.0f ", b, a);
  }
  report(8, worse == 0, std::to_string(worse) + " instances where sdp-cp trails cp; sdp-cp/cp: " + detail);
}

void criterion9() {
  const bool same_dimacs = dimacs_json() == dimacs_json();
  const bool same_oracle = oracle_json() == oracle_json();
  report(9, same_dimacs && same_oracle,
         std::string("dimacs reports ") + (same_dimacs ? "identical" : "differ") + ", oracle reports " +
             (same_oracle ? "identical" : "differ"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  report(6, cert_ok, cert_detail);
  criterion7();
  criterion8();
  criterion9();
  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
