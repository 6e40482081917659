#pragma once

#include <optional>
#include <vector>

#include "liec/coloring.hpp"
#include "liec/graph.hpp"

namespace liec {

// A tree rooted at one of its leaves.
struct Shrub {
  Graph tree;
  Vertex root = -1;

  Edge root_edge() const;
};

// Validates that root is a leaf of tree (and tree is a tree).
Shrub make_shrub(Graph tree, Vertex root);

// A 2-aliec of the shrub with the root edge colored 0: either a full liec,
// or only the root edge is locally regular (and then isolated in its color).
// Constructive bottom-up recursion; verified exhaustive fallback for small
// subtrees if the local repair ever fails.
EdgeColoring shrub_2aliec(const Shrub& s);

// The sum of per-shrub 2-aliecs at a root u: u is monochromatic in color 0
// and only edges incident to u may be locally regular.
struct ShrubBasedColoring {
  Vertex root = -1;
  std::vector<Vertex> neighbors;      // ascending; one shrub per neighbor
  std::vector<Graph> shrubs;          // subtree at neighbor plus the root edge
  std::vector<EdgeColoring> parts;    // 2-aliecs, root edges colored 0
  std::vector<int> a_values;          // color-0 degree of each neighbor in its shrub
  EdgeColoring sum;
};

// u any vertex with at least one neighbor; callers wanting the paper's
// guarantees pass a maximum-degree vertex.
ShrubBasedColoring shrub_based_coloring(const Graph& t, Vertex u);

// True iff no pattern of per-shrub color swaps turns the shrub-based
// coloring into a liec of t. Tries all 2^{deg(u)} patterns; errors when
// deg(u) > 20.
bool is_inversion_resistant(const Graph& t, Vertex u,
                            const ShrubBasedColoring& sbc);

// Three-color liec of a tree with chromatic index three, rooted at the
// max-degree vertex u, which becomes the only 3-chromatic vertex; the third
// color is confined to the shrub with index `special_shrub` (into the
// ascending neighbor list). Errors if the tree admits two colors.
EdgeColoring rainbow_root_3liec(const Graph& t, Vertex u, int special_shrub);

struct TreeColoring {
  bool colorable = false;
  int k = 0;  // number of colors actually used when colorable
  EdgeColoring coloring;
};

// Minimal-by-construction coloring of a tree: locally irregular as-is (one
// color), else shrub-based plus swaps (two), else rainbow root (three).
// Odd bare paths are the only non-colorable trees.
TreeColoring tree_color(const Graph& t);

// Verified coloring of a unicyclic graph with at most three colors, or
// NonColorable per the classification. Bare cycles follow the parity
// construction; otherwise the cycle is detached at a cycle vertex of
// maximum degree and tree machinery colors the result, with an exhaustive
// fallback on small instances.
TreeColoring unicyclic_color(const Graph& g);

}  // namespace liec
