// theta-guide: exact maximum (weighted) stable set / clique solver.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "theta_guide/bench.hpp"
#include "theta_guide/graph.hpp"
#include "theta_guide/hybrid.hpp"
#include "theta_guide/instances.hpp"
#include "theta_guide/log.hpp"
#include "theta_guide/relax.hpp"
#include "theta_guide/simd.hpp"

namespace fs = std::filesystem;
using namespace theta_guide;

namespace {

struct SolveArgs {
  std::string graph;
  std::string weights;
  std::string name;
  bool complement = false;
  std::string method = "sdp-cp";
  std::string max_discrepancy = "full";
  double time_limit = 1000.0;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string rule = "toward-one";
  bool no_timings = false;
  bool sdp_trace = false;
  int sdp_max_iterations = 100;
  std::string write_sdpa;
};

struct GenArgs {
  int n = 0;
  double density = 0.0;
  bool weighted = false;
  std::uint64_t seed = 0;
  std::string out = ".";
};

struct BenchArgs {
  std::string suite;
  double time_limit = 1000.0;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string max_discrepancy = "full";
};

struct InstanceArgs {
  std::string name;
  std::string out;
  bool list = false;
};

std::optional<int> parse_budget(const std::string& s) {
  if (s == "full") return std::nullopt;
  std::size_t used = 0;
  int k = -1;
  try {
    k = std::stoi(s, &used);
  } catch (const std::exception&) {
  }
  if (used != s.size() || k < 0) throw InputError("--max-discrepancy expects a count or 'full', got '" + s + "'");
  return k;
}

void print_trace(const IterationInfo& it) {
  std::fprintf(stderr, "%d,%.17g,%.17g,%.3e,%.3e,%.3e,%.3e,%.4f,%.4f\n", it.iteration, it.primal_value,
               it.dual_value, it.relative_gap, it.primal_infeasibility, it.dual_infeasibility, it.mu,
               it.primal_step, it.dual_step);
}

int run_solve(const SolveArgs& a) {
  const auto method = parse_method(a.method);
  if (!method) throw InputError("unknown method '" + a.method + "'");
  const auto rule = parse_heuristic_rule(a.rule);
  if (!rule) throw InputError("unknown heuristic rule '" + a.rule + "'");
  if (a.format != "json" && a.format != "csv") throw InputError("unknown format '" + a.format + "'");
  if (!(a.time_limit > 0.0)) throw InputError("--time-limit must be positive");

  Graph g = load_graph_source(a.graph);
  if (!a.weights.empty()) g = load_weights_file(g, a.weights);
  if (a.complement) g = complement(g);
  if (!a.write_sdpa.empty()) {
    std::ofstream out(a.write_sdpa, std::ios::binary);
    if (!out) throw InputError("cannot write " + a.write_sdpa);
    write_sdpa(out, build_theta3(g));
  }

  SolveConfig config;
  config.method = *method;
  config.max_discrepancy = parse_budget(a.max_discrepancy);
  config.time_limit = a.time_limit;
  config.seed = a.seed;
  config.rule = *rule;
  config.sdp.max_iterations = a.sdp_max_iterations;
  config.instance = a.name.empty() ? fs::path(a.graph).stem().string() : a.name;
  if (a.sdp_trace) {
    std::fputs("iteration,primal,dual,rel_gap,primal_infeas,dual_infeas,mu,primal_step,dual_step\n", stderr);
    config.sdp.trace = print_trace;
  }

  const auto report = solve_instance(g, config);
  if (a.format == "csv") {
    std::cout << csv_header() << '\n' << to_csv(report) << '\n';
  } else {
    JsonOptions options;
    options.timings = !a.no_timings;
    std::cout << to_json(report, options) << '\n';
  }
  return exit_code(report);
}

int run_gen(const GenArgs& a) {
  if (a.n < 0) throw InputError("--n must be nonnegative");
  if (!(a.density >= 0.0 && a.density <= 1.0)) throw InputError("--density must lie in [0, 1]");
  const Graph g = random_graph(a.n, a.density, a.weighted, a.seed);
  char stem[64];
  std::snprintf(stem, sizeof stem, "%sg%dd%03ld", a.weighted ? "w" : "", a.n, std::lround(a.density * 100.0));
  fs::create_directories(a.out);
  const fs::path graph_path = fs::path(a.out) / (std::string(stem) + ".clq");
  char header[160];
  std::snprintf(header, sizeof header, "random graph n=%d density=%.17g seed=%llu%s", a.n, a.density,
                static_cast<unsigned long long>(a.seed), a.weighted ? " weighted" : "");
  {
    std::ofstream out(graph_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + graph_path.string());
    write_dimacs(out, g, {header});
  }
  std::cout << graph_path.string() << '\n';
  if (a.weighted) {
    const fs::path weight_path = fs::path(a.out) / (std::string(stem) + ".w");
    std::ofstream out(weight_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + weight_path.string());
    write_weights(out, g);
    std::cout << weight_path.string() << '\n';
  }
  return 0;
}

int run_bench_cmd(const BenchArgs& a) {
  std::ifstream in(a.suite);
  if (!in) throw InputError("cannot read manifest " + a.suite);
  const auto entries = parse_manifest(in);
  SolveConfig base;
  base.time_limit = a.time_limit;
  base.seed = a.seed;
  base.max_discrepancy = parse_budget(a.max_discrepancy);
  const auto reports = run_bench(entries, fs::path(a.suite).parent_path().string(), base, a.jobs);
  std::cout << csv_header() << '\n';
  for (const auto& r : reports) std::cout << to_csv(r) << '\n';
  std::cout << to_string(summarize(reports)) << '\n';
  return 0;
}

int run_instance(const InstanceArgs& a) {
  if (a.list) {
    for (const auto& name : benchmark_instance_names()) std::cout << name << '\n';
    return 0;
  }
  const auto g = benchmark_instance(a.name);
  if (!g) throw InputError("unknown benchmark instance '" + a.name + "'");
  if (a.out.empty()) {
    write_dimacs(std::cout, *g, {a.name});
    return 0;
  }
  std::ofstream out(a.out, std::ios::binary);
  if (!out) throw InputError("cannot write " + a.out);
  write_dimacs(out, *g, {a.name});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum weighted stable set and clique solver guided by the Lovasz theta number"};
  app.require_subcommand(1);
  std::string isa;
  app.add_option("--isa", isa, "Force the kernel set (scalar, avx2, neon)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve one instance and print a report");
  s->add_option("--graph", solve.graph, "DIMACS file, or gen:/bench:/empty: source")->required();
  s->add_option("--weights", solve.weights, "Vertex weight file ('<vertex> <weight>' lines)");
  s->add_option("--name", solve.name, "Instance name in the report (default: file stem)");
  s->add_flag("--complement", solve.complement, "Solve on the complement (maximum clique)");
  s->add_option("--method", solve.method, "cp, sdp-cp or theta")->capture_default_str();
  s->add_option("--max-discrepancy", solve.max_discrepancy, "LDS budget: a count or 'full'")->capture_default_str();
  s->add_option("--time-limit", solve.time_limit, "Wall-clock limit in seconds")->capture_default_str();
  s->add_option("--seed", solve.seed, "Seed of the randomized dives")->capture_default_str();
  s->add_option("--format", solve.format, "json or csv")->capture_default_str();
  s->add_option("--rule", solve.rule, "Heuristic rule: toward-one or symmetric")->capture_default_str();
  s->add_flag("--no-timings", solve.no_timings, "Write timing fields as null");
  s->add_flag("--sdp-trace", solve.sdp_trace, "Print SDP iterations as CSV on stderr");
  s->add_option("--sdp-max-iterations", solve.sdp_max_iterations, "Interior-point iteration cap")
      ->capture_default_str();
  s->add_option("--write-sdpa", solve.write_sdpa, "Also write the theta relaxation in sparse SDPA format");

  GenArgs gen;
  auto* gcmd = app.add_subcommand("gen", "Write a seeded random graph");
  gcmd->add_option("--n", gen.n, "Vertex count")->required();
  gcmd->add_option("--density", gen.density, "Edge density in [0, 1]")->required();
  gcmd->add_flag("--weighted", gen.weighted, "Draw integer weights in [1, 100]");
  gcmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gcmd->add_option("--out", gen.out, "Output directory")->capture_default_str();

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a manifest of instances and print a CSV table");
  b->add_option("--suite", bench.suite, "Manifest file")->required();
  b->add_option("--time-limit", bench.time_limit, "Per-run limit in seconds")->capture_default_str();
  b->add_option("--jobs", bench.jobs, "Parallel runs")->capture_default_str();
  b->add_option("--seed", bench.seed, "Seed of the randomized dives")->capture_default_str();
  b->add_option("--max-discrepancy", bench.max_discrepancy, "LDS budget: a count or 'full'")->capture_default_str();

  InstanceArgs inst;
  auto* icmd = app.add_subcommand("instance", "Write a built-in benchmark graph in DIMACS format");
  icmd->add_option("name", inst.name, "Instance name");
  icmd->add_option("--out", inst.out, "Output file (default stdout)");
  icmd->add_flag("--list", inst.list, "List the built-in instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!isa.empty()) simd::set_active_isa(simd::parse_isa(isa));
    if (s->parsed()) return run_solve(solve);
    if (gcmd->parsed()) return run_gen(gen);
    if (b->parsed()) return run_bench_cmd(bench);
    if (icmd->parsed()) return run_instance(inst);
  } catch (const std::exception& e) {
    std::cerr << "theta-guide: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
