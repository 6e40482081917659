#pragma once

#include <cstdint>
#include <vector>

#include "liec/classifier.hpp"
#include "liec/graph.hpp"

namespace liec {

// Random connected cactus on n vertices with exactly `cycles` cycles.
// Requires n >= 1, cycles >= 0, and n >= 1 + 2*cycles when cycles > 0
// (the smallest cycle is a triangle and cycles share at most a vertex).
Graph gen_random_cactus(int n, int cycles, std::uint64_t seed);

// Random tree on n vertices (n >= 1).
Graph gen_random_tree(int n, std::uint64_t seed);

// Random member of the non-colorable triangle family after `steps` growth
// steps (steps >= 0; zero yields the bare triangle). Optionally records the
// derivation, which replays to exactly the returned graph.
Graph gen_T(int steps, std::uint64_t seed, TTrace* trace = nullptr);

// Every connected cactus with 1..max_edges edges, one representative per
// isomorphism class, grouped by ascending edge count. max_edges <= 14.
std::vector<Graph> enumerate_cacti(int max_edges);

// Every connected graph with 1..max_vertices vertices, one representative
// per isomorphism class. Exponential in max_vertices; meant for exhaustive
// cross-checks at small sizes (<= 7).
std::vector<Graph> enumerate_connected_graphs(int max_vertices);

// Every tree with 1..max_vertices vertices, one per isomorphism class.
std::vector<Graph> enumerate_trees(int max_vertices);

}  // namespace liec
