#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "liec/coloring.hpp"
#include "liec/graph.hpp"

namespace liec {

// Limits for the exact search. Zero means "no limit"; when a limit is hit
// the search reports Exhausted explicitly, never a silent wrong answer.
struct SearchBudget {
  long long node_limit = 0;
  double time_limit_seconds = 0;
  bool disable_pruning = false;  // debug switch for pruning-soundness checks
};

enum class SearchStatus { Found, NoneExists, Exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::NoneExists;
  std::optional<EdgeColoring> coloring;  // set iff status == Found
  long long nodes = 0;
  bool found() const { return status == SearchStatus::Found; }
  bool none() const { return status == SearchStatus::NoneExists; }
  bool exhausted() const { return status == SearchStatus::Exhausted; }
};

// Exact decision search: a verified k-liec of g, or proof of absence.
// Edges are ordered along a DFS; saturated vertex pairs prune early; the
// first edge is pinned to color 0 and new colors appear in increasing order
// (existence is invariant under color permutation). k >= 1 required.
SearchResult find_liec(const Graph& g, int k, const SearchBudget& budget = {});

struct ChromaticIndexResult {
  std::optional<int> value;  // min k <= kmax admitting a liec
  bool exhausted = false;    // a budget was hit before the answer was settled
  std::optional<EdgeColoring> witness;
  long long nodes = 0;
};

// Minimum k <= kmax with a k-liec (0 for edgeless graphs), or nullopt when
// none exists up to kmax. kmax defaults to 5, one above the cactus bound, so
// "none up to 5" is meaningful for cacti. Errors on disconnected input.
ChromaticIndexResult chromatic_index_irr(const Graph& g, int kmax = 5,
                                         const SearchBudget& budget = {});

// Emits every k-liec of g exactly once, lexicographically by the color
// vector over the sorted edge list (no symmetry breaking). The visitor
// returns false to stop early.
SearchStatus enumerate_liecs(const Graph& g, int k, const SearchBudget& budget,
                             const std::function<bool(const EdgeColoring&)>& visit);

std::vector<EdgeColoring> all_liecs(const Graph& g, int k,
                                    const SearchBudget& budget = {});

// Exact search for a k-aliec of a shrub (tree rooted at the leaf `root`):
// a coloring where at most the root edge is locally regular, and then only
// as an isolated edge of its color.
SearchResult find_aliec(const Graph& shrub, Vertex root, int k,
                        const SearchBudget& budget = {});

}  // namespace liec
