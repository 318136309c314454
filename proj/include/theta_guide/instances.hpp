#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "theta_guide/graph.hpp"

namespace theta_guide {

// Constructions of the structured DIMACS maximum-clique benchmarks. Each
// returns the clique graph as distributed in the benchmark set; take the
// complement to obtain the stable set instance.

/// hamming<bits>-<d>: binary words of length `bits`, adjacent when their
/// Hamming distance is at least `min_distance`.
Graph hamming_graph(int bits, int min_distance);

/// johnson<length>-<weight>-<d>: binary words of the given length and
/// weight, adjacent when their Hamming distance is at least `min_distance`.
Graph johnson_graph(int length, int weight, int min_distance);

/// Lines of the affine space AG(dimension, 3): a Steiner triple system on
/// 3^dimension points.
std::vector<std::array<int, 3>> affine_triples(int dimension);

/// Clique formulation of the Steiner triple covering problem. Its
/// complement has one vertex per point plus one per (triple, point) slot;
/// each triple's slots form a triangle and each slot is joined to its
/// point. MANN_a9 is steiner_clique_graph(9, affine_triples(2)).
Graph steiner_clique_graph(int points, const std::vector<std::array<int, 3>>& triples);

/// Named benchmark instances this library can build: hamming6-2,
/// hamming6-4, hamming8-2, johnson8-2-4, johnson8-4-4, johnson16-2-4,
/// MANN_a9, MANN_a27.
std::optional<Graph> benchmark_instance(const std::string& name);
std::vector<std::string> benchmark_instance_names();

}  // namespace theta_guide
