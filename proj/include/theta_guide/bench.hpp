#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "theta_guide/graph.hpp"
#include "theta_guide/hybrid.hpp"

namespace theta_guide {

/// Resolves a graph source:
///   gen:n=<n>,density=<d>,seed=<s>[,weighted]   seeded random graph
///   bench:<name>                                  built-in benchmark graph
///   empty:<n>                                     graph without edges
///   anything else                                 DIMACS file, relative to base_dir
/// Throws InputError on a bad source.
Graph load_graph_source(const std::string& source, const std::string& base_dir = "");

/// One manifest line: `<name> <source> [complement] [weights=<path>] [methods=cp,sdp-cp,theta]`.
/// Blank lines and lines starting with '#' are ignored. Methods default to cp,sdp-cp.
struct BenchEntry {
  std::string name;
  std::string source;
  bool complement = false;
  std::optional<std::string> weights;
  std::vector<Method> methods;
};

/// Throws InputError naming the offending line.
std::vector<BenchEntry> parse_manifest(std::istream& in);

/// Graph for an entry with weights and complement applied.
Graph load_entry(const BenchEntry& entry, const std::string& base_dir);

/// Solves every (entry, method) pair on `jobs` worker threads. Graphs are
/// loaded up front so a bad entry fails before any solve. Reports come back
/// in manifest order.
std::vector<SearchReport> run_bench(const std::vector<BenchEntry>& entries, const std::string& base_dir,
                                    const SolveConfig& base, int jobs);

struct BenchSummary {
  int instances = 0;  // instances run with at least two methods
  int cp_wins = 0;
  int sdp_cp_wins = 0;
  int ties = 0;
};

/// Compares cp and sdp-cp incumbents per instance.
BenchSummary summarize(const std::vector<SearchReport>& reports);
std::string to_string(const BenchSummary& s);

}  // namespace theta_guide
