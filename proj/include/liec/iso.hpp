#pragma once

#include <map>
#include <optional>
#include <string>

#include "liec/graph.hpp"

namespace liec {

// Edge-preserving vertex bijection a -> b, found by backtracking with
// degree pruning; deterministic (smallest-id candidates first).
std::optional<std::map<Vertex, Vertex>> find_isomorphism(const Graph& a,
                                                         const Graph& b);

bool isomorphic(const Graph& a, const Graph& b);

// Same search with the root pair pinned: maps ra -> rb. Used to compare
// rooted trees (tails, opened end-grape residues) where the anchor matters.
std::optional<std::map<Vertex, Vertex>> find_rooted_isomorphism(const Graph& a,
                                                                Vertex ra,
                                                                const Graph& b,
                                                                Vertex rb);

bool rooted_isomorphic(const Graph& a, Vertex ra, const Graph& b, Vertex rb);

// Isomorphism-invariant dedup key: the minimum adjacency-matrix string over
// a pruned permutation search (permutations grow a connected prefix, new
// component only when forced). Intended for desk-scale graphs (<= ~14 edges).
std::string canonical_form(const Graph& g);

// Canonical code for connected cacti, linear-time via the block-cut tree:
// rooted at the tree's center, blocks encode as sorted child codes (bridges)
// or the minimum over rotations/reflections (cycles). Equal code iff
// isomorphic; cross-checked against canonical_form in the tests. Errors on
// disconnected or non-cactus input.
std::string cactus_code(const Graph& g);

}  // namespace liec
