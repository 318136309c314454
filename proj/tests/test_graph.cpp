#include <cmath>
#include <sstream>

#include "doctest.h"
#include "theta_guide/graph.hpp"
#include "theta_guide/instances.hpp"

using namespace theta_guide;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in).graph;
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph complete(int n, std::vector<double> w = {}) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e, std::move(w));
}

// Exhaustive subset enumeration, independent of brute_force_alpha's pruning.
double enumerate_alpha(const Graph& g) {
  const int n = g.vertex_count();
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    double w = 0.0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) w += g.weight(v);
    best = std::max(best, w);
  }
  return best;
}

double enumerate_clique(const Graph& g) {
  const int n = g.vertex_count();
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    double w = 0.0;
    for (int u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1u)) continue;
      w += g.weight(u);
      for (int v = u + 1; v < n; ++v)
        if ((mask >> v & 1u) && !g.adjacent(u, v)) ok = false;
    }
    if (ok) best = std::max(best, w);
  }
  return best;
}

}  // namespace

TEST_CASE("dimacs: minimal input") {
  std::istringstream in("p edge 3 2\ne 1 2\ne 2 3\n");
  const auto r = parse_dimacs(in);
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.warnings.empty());
  CHECK(r.graph.weight(0) == 1.0);
}

TEST_CASE("dimacs: duplicate edges collapse with a warning") {
  std::istringstream in("c comment\np edge 3 3\ne 1 2\ne 1 2\ne 2 3\n");
  const auto r = parse_dimacs(in);
  CHECK(r.graph.edge_count() == 2);
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("dimacs: reversed edge counts as duplicate") {
  CHECK(parse("p edge 2 2\ne 1 2\ne 2 1\n").edge_count() == 1);
}

TEST_CASE("dimacs: errors") {
  CHECK_THROWS_AS(parse("e 1 2\n"), InputError);
  CHECK_THROWS_AS(parse("p edge 3 1\np edge 3 1\ne 1 2\n"), InputError);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 1 4\n"), InputError);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 0 2\n"), InputError);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 2 2\n"), InputError);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 1 x\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs_file("/nonexistent/graph.clq"), InputError);
}

TEST_CASE("dimacs: write then parse round-trips") {
  const Graph g = random_graph(17, 0.3, false, 4);
  std::ostringstream out;
  write_dimacs(out, g, {"hello"});
  const std::string text = out.str();
  CHECK(text.rfind("c hello\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(parse(text) == g);
}

TEST_CASE("weights") {
  const Graph g2(2, {});
  std::istringstream a("1 5\n2 7\n");
  const Graph w = load_weights(g2, a);
  CHECK(w.weight(0) == 5.0);
  CHECK(w.weight(1) == 7.0);

  std::istringstream b("2 0\n");
  const Graph w3 = load_weights(Graph(3, {}), b);
  CHECK(w3.weights() == std::vector<double>{1.0, 0.0, 1.0});

  std::istringstream c("3 1\n");
  CHECK_THROWS_AS(load_weights(g2, c), InputError);
  std::istringstream d("1 -2\n");
  CHECK_THROWS_AS(load_weights(g2, d), InputError);
  CHECK_THROWS(Graph(2, {}, {1.0, -1.0}));

  const Graph r = random_graph(9, 0.4, true, 2);
  std::stringstream io;
  write_weights(io, r);
  CHECK(load_weights(Graph(9, r.edges()), io) == r);
}

TEST_CASE("graph: construction invariants") {
  CHECK_THROWS(Graph(3, {{1, 1}}));
  CHECK_THROWS(Graph(3, {{0, 3}}));
  const Graph g(3, {{2, 0}, {0, 2}});
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 2);
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(1, 0));
}

TEST_CASE("complement") {
  CHECK(complement(complete(4)).edge_count() == 0);
  CHECK(complement(Graph(3, {})) == complete(3));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_graph(13, 0.1 * static_cast<double>(seed), seed % 2 == 1, seed);
    const Graph c = complement(g);
    CHECK(complement(c) == g);
    CHECK(g.edge_count() + c.edge_count() == 13 * 12 / 2);
    CHECK(c.weights() == g.weights());
    for (const auto& e : c.edges()) CHECK_FALSE(g.adjacent(e.u, e.v));
  }
}

TEST_CASE("edge density") {
  std::vector<Edge> e;
  const Graph g70 = random_graph(50, 70.0 / 1225.0, false, 1);
  CHECK(g70.edge_count() == 70);
  CHECK(edge_density(g70) == doctest::Approx(70.0 / 1225.0).epsilon(1e-15));
  CHECK(edge_density(complete(6)) == 1.0);
  CHECK(edge_density(Graph(6, {})) == 0.0);
  CHECK_THROWS(edge_density(Graph(1, {})));
}

TEST_CASE("random graph") {
  CHECK(random_graph(10, 0.0, false, 3).edge_count() == 0);
  CHECK(random_graph(10, 1.0, false, 3) == complete(10));
  CHECK(random_graph(50, 0.0571, false, 8).edge_count() == 70);
  CHECK(random_graph(50, 0.057, false, 1).edge_count() == 70);
  CHECK(random_graph(30, 0.2, true, 5) == random_graph(30, 0.2, true, 5));
  CHECK_FALSE(random_graph(30, 0.2, false, 5) == random_graph(30, 0.2, false, 6));
  const Graph w = random_graph(200, 0.01, true, 1);
  for (double x : w.weights()) {
    CHECK(x >= 1.0);
    CHECK(x <= 100.0);
    CHECK(x == std::floor(x));
  }
  CHECK_THROWS(random_graph(5, 1.5, false, 0));
}

TEST_CASE("brute force alpha: examples") {
  CHECK(brute_force_alpha(cycle(5)).value == 2.0);
  CHECK(brute_force_alpha(Graph(6, {})).value == 6.0);
  CHECK(brute_force_alpha(complete(5, {1, 2, 3, 4, 5})).value == 5.0);
  CHECK_THROWS(brute_force_alpha(Graph(kBruteForceLimit + 1, {})));
}

TEST_CASE("brute force alpha agrees with subset enumeration and clique enumeration") {
  for (int i = 0; i < 40; ++i) {
    const int n = 4 + i % 11;
    const double d = 0.05 + 0.9 * static_cast<double>(i % 7) / 6.0;
    const Graph g = random_graph(n, d, i % 2 == 0, static_cast<std::uint64_t>(100 + i));
    const StableSet s = brute_force_alpha(g);
    CHECK(is_stable_set(g, s.members));
    CHECK(set_weight(g, s.members) == s.value);
    CHECK(s.value == enumerate_alpha(g));
    CHECK(s.value == enumerate_clique(complement(g)));
  }
}

TEST_CASE("benchmark instances have the DIMACS shapes") {
  struct Shape {
    const char* name;
    int n;
    int m;
  };
  for (const auto& s : {Shape{"hamming6-2", 64, 1824}, Shape{"hamming6-4", 64, 704}, Shape{"johnson8-2-4", 28, 210},
                        Shape{"johnson8-4-4", 70, 1855}, Shape{"MANN_a9", 45, 918}, Shape{"hamming8-2", 256, 31616},
                        Shape{"johnson16-2-4", 120, 5460}, Shape{"MANN_a27", 378, 70551}}) {
    CAPTURE(s.name);
    const auto g = benchmark_instance(s.name);
    REQUIRE(g.has_value());
    CHECK(g->vertex_count() == s.n);
    CHECK(g->edge_count() == s.m);
  }
  CHECK_FALSE(benchmark_instance("nope").has_value());
  CHECK(complement(*benchmark_instance("hamming6-2")).edge_count() == 192);
}
