#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liec/graph.hpp"

namespace liec {

// Colors are positional small integers 0..k-1; the letters a, b, c, ... are
// display names only (colorings get freely renamed, identity lives in the
// positions).
using Color = int;

inline constexpr int kMaxColors = 8;

inline char color_name(Color c) { return static_cast<char>('a' + c); }

// Total or partial assignment edge -> color; the domain is exactly the key
// set (no sentinel colors).
class EdgeColoring {
 public:
  EdgeColoring() = default;

  void set(Vertex u, Vertex v, Color c) { set(mk_edge(u, v), c); }
  void set(Edge e, Color c);
  bool has(Edge e) const { return assign_.count(e) > 0; }
  bool has(Vertex u, Vertex v) const { return has(mk_edge(u, v)); }
  Color at(Edge e) const;
  Color at(Vertex u, Vertex v) const { return at(mk_edge(u, v)); }
  void erase(Edge e) { assign_.erase(e); }

  const std::map<Edge, Color>& assignment() const { return assign_; }
  int size() const { return static_cast<int>(assign_.size()); }
  bool empty() const { return assign_.empty(); }
  std::set<Color> used_colors() const;
  // Number of colors in 0..max_used (counting unused gaps), i.e. max+1.
  int color_span() const;

  // True iff the domain is exactly the edge set of g.
  bool total_on(const Graph& g) const;

  bool operator==(const EdgeColoring& o) const { return assign_ == o.assign_; }

 private:
  std::map<Edge, Color> assign_;
};

std::string to_string(const EdgeColoring& col);

// Per-vertex incident color sets and per-color degrees for a total coloring.
class ChromaticProfile {
 public:
  ChromaticProfile(const Graph& g, const EdgeColoring& col);

  int color_degree(Vertex v, Color c) const;
  const std::set<Color>& incident_colors(Vertex v) const;
  // Number of distinct colors incident to v (0 for isolated vertices).
  int chromatic_count(Vertex v) const;
  bool monochromatic(Vertex v) const { return chromatic_count(v) == 1; }
  bool bichromatic(Vertex v) const { return chromatic_count(v) == 2; }

 private:
  std::map<Vertex, std::map<Color, int>> deg_;
  std::map<Vertex, std::set<Color>> inc_;
  std::set<Color> empty_;
};

// d^c(v): number of edges at v colored c. Errors if v is absent or an edge
// at v is uncolored.
int color_degree(const Graph& g, const EdgeColoring& col, Vertex v, Color c);

// Multiset {d^c(w) : vw is an edge colored c}, sorted non-increasingly.
std::vector<int> a_sequence(const Graph& g, const EdgeColoring& col, Vertex v,
                            Color c);

struct LiecResult {
  bool ok = false;
  // Lexicographically first edge uv with color c and d^c(u) == d^c(v).
  std::optional<Edge> violating;
};

// True iff every color class induces a locally irregular subgraph.
// Errors if col is not total on g.
LiecResult is_liec(const Graph& g, const EdgeColoring& col);

enum class AliecStatus { Liec, ProperAliec, Invalid };

// Classifies a total coloring of a shrub (tree rooted at a leaf):
// Liec if fully locally irregular; ProperAliec if the unique locally regular
// edge is the root edge and that edge is isolated in its color class;
// Invalid otherwise. Errors if shrub_g is not a tree or no endpoint of
// root_edge is a leaf.
AliecStatus is_aliec(const Graph& shrub_g, Edge root_edge,
                     const EdgeColoring& col);

// Union of colorings with pairwise disjoint domains; errors naming the first
// clash edge otherwise.
EdgeColoring sum_colorings(const std::vector<EdgeColoring>& parts);

// Relabels colors. Colors without an entry map to themselves; the effective
// map must be injective on the colors used.
EdgeColoring permute_colors(const EdgeColoring& col,
                            const std::map<Color, Color>& mapping);

// Convenience for the role notation used throughout: roles[i] is the new
// color for positional color i.
EdgeColoring apply_roles(const EdgeColoring& col,
                         const std::vector<Color>& roles);

// Replays a trim trace in reverse on a k-liec of the trimmed graph (k >= 3),
// producing a k-liec of the original graph: re-inserted pendant segments get
// a color absent at the attachment leaf; ear insertions splice two equal
// colors at a bichromatic internal vertex. Errors if k < 3.
EdgeColoring extend_through_trim(const EdgeColoring& trimmed_coloring,
                                 const TrimTrace& trace, int k);

}  // namespace liec
