#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace theta_guide {

/// Raised for malformed graph or weight input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An undirected edge between 0-based vertices, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Weighted undirected simple graph. Vertices are 0-based here; the DIMACS
/// reader and writer translate to and from the 1-based external labels.
///
/// Immutable after construction: edges are canonicalized (u < v, sorted,
/// deduplicated) and adjacency lists are built once.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list. Throws InputError on
  /// self-loops, out-of-range endpoints or negative weights. Duplicates and
  /// reversed pairs are folded together.
  Graph(int n, std::vector<Edge> edges, std::vector<double> weights = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;

  /// True when every weight is a whole number.
  bool integral_weights() const;
  double total_weight() const;

  /// Copy with the weight vector replaced.
  Graph with_weights(std::vector<double> weights) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<std::vector<int>> adjacency_;
};

struct StableSet {
  std::vector<int> members;  // sorted, 0-based
  double value = 0.0;
};

/// True when no two members are adjacent and every member is a vertex of g.
bool is_stable_set(const Graph& g, const std::vector<int>& members);
double set_weight(const Graph& g, const std::vector<int>& members);

struct DimacsParseResult {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Reads the DIMACS clique format ("c", "p edge n m", "e i j"). Duplicate
/// edge lines and an edge count mismatch are reported as warnings.
DimacsParseResult parse_dimacs(std::istream& in);
DimacsParseResult parse_dimacs_file(const std::string& path);

/// Writes "p edge n m" followed by sorted "e i j" lines, LF endings.
void write_dimacs(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});

/// Applies a "<vertex> <weight>" sidecar; unlisted vertices keep weight 1.
Graph load_weights(const Graph& g, std::istream& in);
Graph load_weights_file(const Graph& g, const std::string& path);
void write_weights(std::ostream& out, const Graph& g);

Graph complement(const Graph& g);

/// m / (n(n-1)/2). Requires n >= 2.
double edge_density(const Graph& g);

/// Exactly round(density * n(n-1)/2) distinct edges drawn uniformly without
/// replacement; integer weights uniform on [1,100] when weighted.
Graph random_graph(int n, double density, bool weighted, std::uint64_t seed);

/// Exhaustive maximum-weight stable set. Guarded to n <= 25.
StableSet brute_force_alpha(const Graph& g);

inline constexpr int kBruteForceLimit = 25;

}  // namespace theta_guide
