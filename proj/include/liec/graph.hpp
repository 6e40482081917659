#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liec {

using Vertex = int;
// Canonical undirected edge: always stored as (min, max).
using Edge = std::pair<Vertex, Vertex>;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Edge mk_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Immutable simple undirected graph with stable integer vertex ids.
// Ids are arbitrary nonnegative ints (surgery can leave gaps); iteration
// order is always sorted, so every operation is deterministic.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list. Loops are rejected; duplicate edges are
  // collapsed (setting *duplicate_warning if provided).
  static Graph from_edges(const std::vector<Edge>& edges,
                          bool* duplicate_warning = nullptr);
  // Same, but with an explicit vertex list so isolated vertices survive.
  static Graph from_parts(const std::vector<Vertex>& vertices,
                          const std::vector<Edge>& edges,
                          bool* duplicate_warning = nullptr);

  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(verts_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool has_vertex(Vertex v) const { return adj_.count(v) > 0; }
  bool has_edge(Vertex u, Vertex v) const;
  // Sorted neighbor list; error if v is absent.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const;
  std::vector<Vertex> leaves() const;  // degree-1 vertices, sorted

  // Surgery (each returns a new graph). Isolated vertices created by a
  // deletion are dropped; explicitly listed vertices (from_parts/induced)
  // are kept.
  Graph with_edge(Vertex u, Vertex v) const;     // error if edge exists
  Graph without_edge(Vertex u, Vertex v) const;  // error if edge absent
  Graph without_vertex(Vertex v) const;
  Graph induced(const std::vector<Vertex>& vs) const;

  bool connected() const;
  std::vector<std::vector<Vertex>> components() const;  // sorted vertex lists

  // Biconnected blocks. In a cactus every block is a single edge or a cycle.
  struct Block {
    std::vector<Edge> edges;      // sorted canonical edges
    std::vector<Vertex> vertices; // sorted
    bool is_cycle() const { return edges.size() >= 3 && edges.size() == vertices.size(); }
    bool is_bridge() const { return edges.size() == 1; }
  };
  std::vector<Block> blocks() const;

  // True iff every block is an edge or a cycle. Errors on disconnected input.
  bool is_cactus() const;
  // The unique edge-disjoint cycles of a cactus, each walked from its
  // smallest vertex toward that vertex's smaller cycle neighbor.
  // Errors if the graph is not a (connected) cactus.
  std::vector<std::vector<Vertex>> cycle_list() const;

  bool operator==(const Graph& o) const {
    return verts_ == o.verts_ && edges_ == o.edges_;
  }

 private:
  std::vector<Vertex> verts_;            // sorted
  std::vector<Edge> edges_;              // sorted canonical pairs
  std::map<Vertex, std::vector<Vertex>> adj_;  // sorted neighbor lists

  static Graph build(std::vector<Vertex> verts, std::vector<Edge> edges,
                     bool* duplicate_warning);
};

std::string to_string(const Graph& g);

// Maximal path hanging off the tree part of a graph: path[0] is a leaf,
// internal vertices have degree 2, path.back() (the anchor) has degree >= 3 —
// or is the opposite leaf when the whole graph is a bare path.
struct PendantPath {
  std::vector<Vertex> path;
  int length() const { return static_cast<int>(path.size()) - 1; }
  Vertex leaf() const { return path.front(); }
  Vertex anchor() const { return path.back(); }
};

// Maximal path whose internal vertices have degree 2 in the host graph and
// whose endpoints have degree >= 3. A cycle attached to the rest of the graph
// at a single vertex is a closed ear (path.front() == path.back()).
struct Ear {
  std::vector<Vertex> path;
  bool closed = false;
  int length() const { return static_cast<int>(path.size()) - 1; }
};

// One per leaf (a bare path yields two mirror entries).
std::vector<PendantPath> pendant_paths(const Graph& g);
// All ears with at least one internal vertex, deterministically oriented:
// open ears run from their smaller endpoint; closed ears start at the
// attachment vertex and walk toward its smaller neighbor on the cycle.
std::vector<Ear> ears(const Graph& g);

// A single 2-edge shortening performed by trim().
struct TrimStep {
  enum class Kind { PendantShorten, EarShorten };
  Kind kind;
  Vertex anchor = -1;  // pendant: path anchor; ear: walk start vertex

  // Pendant data: leaf v0 and its neighbor v1 were removed; v2 (attach)
  // became the new leaf.
  Vertex removed_leaf = -1;
  Vertex removed_next = -1;
  Vertex attach = -1;

  // Ear data: vertex walk before the step (closed ears repeat the start at
  // the end). The first two internal vertices were removed and the walk start
  // was reconnected to the third.
  std::vector<Vertex> ear_before;
  std::vector<Vertex> ear_after;

  int removed_length = 2;
};

struct TrimTrace {
  std::vector<TrimStep> steps;
  bool empty() const { return steps.empty(); }
  // Undoes every step in reverse, reconstructing the pre-trim graph
  // (exact vertex ids, not just up to isomorphism).
  Graph rebuild(const Graph& trimmed) const;
};

// Shortens pendant paths of length >= 3 and ears of length >= 5 (a bare cycle
// of length >= 6 counts as a closed ear anchored at its smallest vertex) by
// two edges at a time until none remain. Pendant shortenings are exhausted
// before ear shortenings; ties go to the smallest anchor id, then smallest
// leaf / first-internal id. Errors on disconnected input.
std::pair<Graph, TrimTrace> trim(const Graph& g);

bool is_trimmed(const Graph& g);

}  // namespace liec
