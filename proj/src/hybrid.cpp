#include "theta_guide/hybrid.hpp"

#include <cstdio>

#include "theta_guide/log.hpp"
#include "theta_guide/scores.hpp"

namespace theta_guide {

namespace {

SearchReport blank_report(const Graph& g, const SolveConfig& config, Method method) {
  SearchReport r;
  r.instance = config.instance;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.density = g.vertex_count() >= 2 ? edge_density(g) : 0.0;
  r.method = method;
  r.seed = config.seed;
  return r;
}

void fill_search(SearchReport& r, const SearchResult& s) {
  r.alpha_found = s.best.value;
  r.proven = s.proven();
  r.backtracks = s.backtracks;
  r.time_limit_hit = s.timed_out;
  r.status = r.proven ? RunStatus::optimal : RunStatus::time_limit;
  r.solution.clear();
  for (int v : s.best.members) r.solution.push_back(v + 1);
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

}  // namespace

SearchReport solve_cp(const Graph& g, const SolveConfig& config) {
  const Deadline deadline(config.time_limit);
  auto r = blank_report(g, config, Method::cp);
  const CpModel model(g);
  fill_search(r, dfs_search(model, deadline));
  r.total_time = deadline.elapsed();
  log_line(LogLevel::info, fmt("cp: value %.17g, %.0f backtracks, %.3f s", *r.alpha_found,
                               static_cast<double>(r.backtracks), r.total_time));
  return r;
}

SearchReport solve_hybrid(const Graph& g, const SolveConfig& config) {
  const Deadline deadline(config.time_limit);
  auto r = blank_report(g, config, Method::sdp_cp);
  if (g.vertex_count() == 0) {
    r.alpha_found = 0.0;
    r.proven = true;
    r.sdp_time = 0.0;
    r.theta = 0.0;
    return r;
  }

  const auto theta = compute_theta(g, config.sdp);
  r.sdp_time = deadline.elapsed();
  const auto& sol = theta.solution;
  log_line(LogLevel::info, fmt("sdp: primal %.9f dual %.9f in %.3f s", sol.primal_value, sol.dual_value, *r.sdp_time));

  if (sol.status != SdpStatus::optimal) {
    log_line(LogLevel::info, "sdp did not converge (" + to_string(sol.status) + "), falling back to cp");
    const CpModel model(g);
    fill_search(r, dfs_search(model, deadline));
    r.status = RunStatus::degraded;
    r.total_time = deadline.elapsed();
    return r;
  }

  r.theta = sol.dual_value;
  const CpModel model(g, sol.dual_value);
  const auto dives = heuristic_dive(model, theta.scores, config.seed, config.rule);
  log_line(LogLevel::info, fmt("dive: best %.17g over %.0f dives", dives.best.value, dives.dives));

  const auto search = lds_search(model, dives.path, config.max_discrepancy, deadline, {}, dives.best);
  fill_search(r, search);
  // an incumbent the waves never improved on is the wave-0 leaf
  r.best_discrepancy = search.best_discrepancy.value_or(0);
  r.total_time = deadline.elapsed();
  log_line(LogLevel::info, fmt("lds: value %.17g after %.0f waves, %.0f backtracks", *r.alpha_found,
                               search.waves, static_cast<double>(r.backtracks)));
  return r;
}

SearchReport solve_theta(const Graph& g, const SolveConfig& config) {
  const Deadline deadline(config.time_limit);
  auto r = blank_report(g, config, Method::theta);
  if (g.vertex_count() == 0) {
    r.sdp_time = 0.0;
    r.theta = 0.0;
    return r;
  }
  const auto theta = compute_theta(g, config.sdp);
  r.sdp_time = deadline.elapsed();
  r.total_time = *r.sdp_time;
  r.theta = theta.solution.dual_value;
  r.status = theta.solution.status == SdpStatus::optimal ? RunStatus::optimal : RunStatus::degraded;
  return r;
}

SearchReport solve_instance(const Graph& g, const SolveConfig& config) {
  switch (config.method) {
    case Method::cp: return solve_cp(g, config);
    case Method::sdp_cp: return solve_hybrid(g, config);
    case Method::theta: return solve_theta(g, config);
  }
  return solve_cp(g, config);
}

int exit_code(const SearchReport& r) {
  switch (r.status) {
    case RunStatus::optimal: return 0;
    case RunStatus::time_limit: return 2;
    case RunStatus::degraded: return 3;
  }
  return 1;
}

}  // namespace theta_guide
