#include "theta_guide/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "theta_guide/rng.hpp"

namespace theta_guide {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<double> weights)
    : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (n_ < 0) throw InputError("negative vertex count");
  if (weights_.empty()) weights_.assign(static_cast<std::size_t>(n_), 1.0);
  if (static_cast<int>(weights_.size()) != n_) throw InputError("weight vector length differs from vertex count");
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw InputError("vertex weights must be finite and nonnegative");
  }
  for (Edge& e : edges_) {
    if (e.u == e.v) throw InputError("self-loop on vertex " + std::to_string(e.u + 1));
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) throw InputError("edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& row = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::integral_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return std::floor(w) == w; });
}

double Graph::total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

Graph Graph::with_weights(std::vector<double> weights) const { return Graph(n_, edges_, std::move(weights)); }

bool is_stable_set(const Graph& g, const std::vector<int>& members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (members[a] < 0 || members[a] >= g.vertex_count()) return false;
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[a] == members[b] || g.adjacent(members[a], members[b])) return false;
    }
  }
  return true;
}

double set_weight(const Graph& g, const std::vector<int>& members) {
  double total = 0.0;
  for (int v : members) total += g.weight(v);
  return total;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits on blanks; locale-independent.
std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_integer(std::string_view tok, int line_no) {
  long long value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError("line " + std::to_string(line_no) + ": expected integer, got '" + std::string(tok) + "'");
  }
  return value;
}

double to_real(std::string_view tok, int line_no) {
  double value = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw InputError("line " + std::to_string(line_no) + ": expected number, got '" + std::string(tok) + "'");
  }
  return value;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

DimacsParseResult parse_dimacs(std::istream& in) {
  DimacsParseResult result;
  long long n = -1;
  long long declared_m = 0;
  std::vector<Edge> edges;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == 'c') continue;
    const auto tok = tokens(line);
    if (tok[0] == "p") {
      if (n >= 0) throw InputError("line " + std::to_string(line_no) + ": duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw InputError("line " + std::to_string(line_no) + ": malformed problem line");
      }
      n = to_integer(tok[2], line_no);
      declared_m = to_integer(tok[3], line_no);
      if (n < 1 || n > 1'000'000 || declared_m < 0) {
        throw InputError("line " + std::to_string(line_no) + ": invalid problem dimensions");
      }
    } else if (tok[0] == "e") {
      if (n < 0) throw InputError("line " + std::to_string(line_no) + ": edge before problem line");
      if (tok.size() != 3) throw InputError("line " + std::to_string(line_no) + ": malformed edge line");
      const long long i = to_integer(tok[1], line_no);
      const long long j = to_integer(tok[2], line_no);
      if (i < 1 || i > n || j < 1 || j > n) {
        throw InputError("line " + std::to_string(line_no) + ": vertex index outside 1.." + std::to_string(n));
      }
      if (i == j) throw InputError("line " + std::to_string(line_no) + ": self-loop");
      edges.push_back({static_cast<int>(std::min(i, j) - 1), static_cast<int>(std::max(i, j) - 1)});
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (n < 0) throw InputError("missing problem line");

  const std::size_t raw_count = edges.size();
  result.graph = Graph(static_cast<int>(n), std::move(edges));
  const auto distinct = static_cast<std::size_t>(result.graph.edge_count());
  if (distinct != raw_count) {
    result.warnings.push_back(std::to_string(raw_count - distinct) + " duplicate edge line(s) ignored");
  }
  if (static_cast<long long>(distinct) != declared_m) {
    result.warnings.push_back("problem line declares " + std::to_string(declared_m) + " edges, found " +
                              std::to_string(distinct) + " distinct");
  }
  return result;
}

DimacsParseResult parse_dimacs_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Graph load_weights(const Graph& g, std::istream& in) {
  std::vector<double> w(static_cast<std::size_t>(g.vertex_count()), 1.0);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == 'c' || line.front() == '#') continue;
    const auto tok = tokens(line);
    if (tok.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected '<vertex> <weight>'");
    const long long v = to_integer(tok[0], line_no);
    const double weight = to_real(tok[1], line_no);
    if (v < 1 || v > g.vertex_count()) {
      throw InputError("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " out of range");
    }
    if (weight < 0.0) throw InputError("line " + std::to_string(line_no) + ": negative weight");
    w[static_cast<std::size_t>(v - 1)] = weight;
  }
  return g.with_weights(std::move(w));
}

Graph load_weights_file(const Graph& g, const std::string& path) {
  auto in = open_or_throw(path);
  return load_weights(g, in);
}

void write_weights(std::ostream& out, const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::ostringstream num;
    num.imbue(std::locale::classic());
    num.precision(17);
    num << g.weight(v);
    out << v + 1 << ' ' << num.str() << '\n';
  }
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.edges().size());
  for (int u = 0; u < n; ++u) {
    const auto& row = g.neighbors(u);
    auto it = std::upper_bound(row.begin(), row.end(), u);
    for (int v = u + 1; v < n; ++v) {
      if (it != row.end() && *it == v) {
        ++it;
        continue;
      }
      edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges), g.weights());
}

double edge_density(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw InputError("edge density needs at least two vertices");
  return static_cast<double>(g.edge_count()) / (0.5 * static_cast<double>(n) * (n - 1));
}

Graph random_graph(int n, double density, bool weighted, std::uint64_t seed) {
  if (n < 2) throw InputError("random_graph needs n >= 2");
  if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must lie in [0,1]");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const auto m = static_cast<std::uint64_t>(std::llround(density * static_cast<double>(pairs)));

  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates over the pair indices.
  std::vector<std::uint32_t> pool(pairs);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::uint64_t k = 0; k < m; ++k) {
    const std::uint64_t pick = k + uniform_below(rng, pairs - k);
    std::swap(pool[k], pool[pick]);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    // decode index -> (u, v) in row-major upper-triangle order
    std::uint64_t idx = pool[k];
    int u = 0;
    std::uint64_t row_len = static_cast<std::uint64_t>(n - 1);
    while (idx >= row_len) {
      idx -= row_len;
      ++u;
      --row_len;
    }
    edges.push_back({u, u + 1 + static_cast<int>(idx)});
  }
  std::vector<double> weights(static_cast<std::size_t>(n), 1.0);
  if (weighted) {
    for (auto& w : weights) w = static_cast<double>(1 + uniform_below(rng, 100));
  }
  return Graph(n, std::move(edges), std::move(weights));
}

namespace {

struct BruteForce {
  std::vector<std::uint32_t> closed_nbhd;
  std::vector<double> w;
  double best = -1.0;
  std::uint32_t best_set = 0;

  void run(std::uint32_t candidates, std::uint32_t chosen, double value, double remaining) {
    if (value + remaining <= best) return;
    if (candidates == 0) {
      best = value;
      best_set = chosen;
      return;
    }
    const int v = std::countr_zero(candidates);
    const std::uint32_t bit = 1u << v;
    // take v
    std::uint32_t next = candidates & ~closed_nbhd[static_cast<std::size_t>(v)];
    run(next, chosen | bit, value + w[static_cast<std::size_t>(v)], sum(next));
    // skip v
    next = candidates & ~bit;
    run(next, chosen, value, remaining - w[static_cast<std::size_t>(v)]);
  }

  double sum(std::uint32_t mask) const {
    double s = 0.0;
    while (mask) {
      s += w[static_cast<std::size_t>(std::countr_zero(mask))];
      mask &= mask - 1;
    }
    return s;
  }
};

}  // namespace

StableSet brute_force_alpha(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kBruteForceLimit) throw InputError("brute_force_alpha is limited to n <= 25");
  BruteForce bf;
  bf.w = g.weights();
  bf.closed_nbhd.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    std::uint32_t mask = 1u << v;
    for (int u : g.neighbors(v)) mask |= 1u << u;
    bf.closed_nbhd[static_cast<std::size_t>(v)] = mask;
  }
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1u);
  bf.run(all, 0, 0.0, bf.sum(all));

  StableSet result;
  for (int v = 0; v < n; ++v) {
    if (bf.best_set & (1u << v)) result.members.push_back(v);
  }
  result.value = set_weight(g, result.members);
  return result;
}

}  // namespace theta_guide
