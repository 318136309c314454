#include "theta_guide/instances.hpp"

#include <bit>
#include <map>

namespace theta_guide {

Graph hamming_graph(int bits, int min_distance) {
  const int n = 1 << bits;
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (std::popcount(static_cast<unsigned>(a ^ b)) >= min_distance) edges.push_back({a, b});
    }
  }
  return Graph(n, std::move(edges));
}

Graph johnson_graph(int length, int weight, int min_distance) {
  std::vector<unsigned> words;
  // lexicographic order of the weight-`weight` words, as in the benchmark files
  for (unsigned w = 0; w < (1u << length); ++w) {
    if (std::popcount(w) == weight) words.push_back(w);
  }
  const int n = static_cast<int>(words.size());
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (std::popcount(words[static_cast<std::size_t>(a)] ^ words[static_cast<std::size_t>(b)]) >= min_distance) {
        edges.push_back({a, b});
      }
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<std::array<int, 3>> affine_triples(int dimension) {
  int points = 1;
  for (int d = 0; d < dimension; ++d) points *= 3;
  auto digit = [](int x, int d) {
    for (int k = 0; k < d; ++k) x /= 3;
    return x % 3;
  };
  // the third point on the line through a and b is -(a+b) mod 3 coordinate-wise
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < points; ++a) {
    for (int b = a + 1; b < points; ++b) {
      int c = 0;
      int place = 1;
      for (int d = 0; d < dimension; ++d) {
        c += ((6 - digit(a, d) - digit(b, d)) % 3) * place;
        place *= 3;
      }
      if (c > b) triples.push_back({a, b, c});
    }
  }
  return triples;
}

Graph steiner_clique_graph(int points, const std::vector<std::array<int, 3>>& triples) {
  const int n = points + 3 * static_cast<int>(triples.size());
  std::vector<Edge> stable_edges;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const int base = points + 3 * static_cast<int>(t);
    for (int k = 0; k < 3; ++k) {
      stable_edges.push_back({triples[t][static_cast<std::size_t>(k)], base + k});
      for (int l = k + 1; l < 3; ++l) stable_edges.push_back({base + k, base + l});
    }
  }
  return complement(Graph(n, std::move(stable_edges)));
}

namespace {

const std::map<std::string, Graph (*)()>& registry() {
  static const std::map<std::string, Graph (*)()> table = {
      {"hamming6-2", [] { return hamming_graph(6, 2); }},
      {"hamming6-4", [] { return hamming_graph(6, 4); }},
      {"hamming8-2", [] { return hamming_graph(8, 2); }},
      {"johnson8-2-4", [] { return johnson_graph(8, 2, 4); }},
      {"johnson8-4-4", [] { return johnson_graph(8, 4, 4); }},
      {"johnson16-2-4", [] { return johnson_graph(16, 2, 4); }},
      {"MANN_a9", [] { return steiner_clique_graph(9, affine_triples(2)); }},
      {"MANN_a27", [] { return steiner_clique_graph(27, affine_triples(3)); }},
  };
  return table;
}

}  // namespace

std::optional<Graph> benchmark_instance(const std::string& name) {
  const auto& table = registry();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second();
}

std::vector<std::string> benchmark_instance_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

}  // namespace theta_guide
