#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "liec/coloring.hpp"
#include "liec/graph.hpp"

namespace liec {

// Structural decomposition of cacti: grapes (all cycles through one root),
// their berries, end-grapes with exit edges, tails, docking vertices, and
// the opening/closing surgery on triangle berries.

enum class BerryKind { Unicyclic, Acyclic };

// One berry of a grape: the subgraph induced by a component of g - root
// together with the root. Unicyclic berries meet the root twice (their cycle
// runs through it), acyclic berries once.
struct BerryDescriptor {
  Graph subgraph;
  Vertex root = -1;
  BerryKind kind = BerryKind::Acyclic;
  // Unicyclic only: the cycle as a closed walk root, v, ..., w (v < w).
  std::vector<Vertex> cycle;
  Vertex v = -1;            // smaller neighbor of root inside the berry
  std::optional<Vertex> w;  // second neighbor, present iff unicyclic

  bool is_cyclic(Vertex x) const {
    for (Vertex c : cycle)
      if (c == x) return true;
    return false;
  }
};

enum class ExitKind { Single, DoubleMono, DoubleBi };

// A maximal end-grape G_u of a cactus: a grape hanging off the rest of the
// graph so that only its root u touches outside edges, of which there are
// one or two (two only when they lie on a common cycle of the rest).
struct EndGrapeDescriptor {
  Vertex root = -1;
  std::vector<BerryDescriptor> berries;  // sorted by attach neighbor v
  Graph subgraph;                        // G_u: union of the berries
  std::vector<Edge> exit_edges;          // edges at root outside G_u, sorted
  // Single is known structurally; the double kinds depend on a coloring of
  // the root component and are classified later via classify_exits.
  std::optional<ExitKind> exit_kind;
  Graph root_component;  // G0 = g minus the berry interiors
  // 1..6 when the berry multiset and exit count match one of the small
  // shapes that the reduction recipes cannot handle (two triangles with one
  // exit, two triangles with two exits, triangle + even path, triangle + B7,
  // two triangles + B7 with two exits, triangle + two B7 with two exits);
  // 0 otherwise. Shapes with label != 0 are dissolved by open().
  int singular = 0;
  // True for the other reduction-resistant shape: a single triangle berry
  // carrying even pendant paths at its non-root cycle vertices (possibly of
  // length zero), with a single exit. Handled via g0_prime, never opened.
  bool b2_star = false;

  Vertex u1() const;  // far endpoint of the first exit edge
  Vertex u2() const;  // far endpoint of the second exit edge; errors if single
  Vertex v1() const;  // attach neighbor of the first unicyclic berry
  // Root component plus a fresh pendant edge root-v1 (v1 re-enters as a new
  // degree-1 vertex; its id is reused so colors map back directly).
  Graph g0_prime() const;
};

// Pendant structure above a vertex x of a berry: for cyclic x the component
// of the berry minus its cycle edges containing x, for acyclic x the
// component below the parent edge.
struct Tail {
  Vertex anchor = -1;
  Graph subgraph;
};

// One opening: which end-grape was dissolved and which root-w edges were
// removed (one per triangle berry, the higher-id w). Enough to restore the
// original edge set exactly.
struct OpeningRecord {
  Vertex root = -1;
  int label = 0;
  std::vector<Edge> removed;
};

struct OpenResult {
  Graph g_op;
  std::vector<OpeningRecord> reopenings;
};

// Result of closing opened shapes back at chosen docking vertices: the
// closing edges per anchor and the berry subgraph with them re-added.
struct ClosureMap {
  Vertex berry_root = -1;
  Graph berry_subgraph;
  std::vector<std::pair<Vertex, int>> docking;
  std::map<Vertex, std::vector<Edge>> closing_edges;
  Graph g_cl;
};

// Root of g when g is a grape: the common vertex of all cycles (unique when
// there are at least two; smallest cycle vertex when there is one), nullopt
// when the cycles share no vertex. Errors on acyclic input.
std::optional<Vertex> grape_root(const Graph& g);

// One berry per component of g - root; together they partition E(g).
// Sorted by the attach neighbor v.
std::vector<BerryDescriptor> berries(const Graph& g, Vertex root);

// All maximal end-grapes of a cactus with cycles not sharing a vertex,
// sorted by root id. Each descriptor is re-verified against the definition
// after construction. Two exit edges landing in different components of the
// remainder disqualify a candidate root. Errors on grapes (including
// unicyclic graphs) and acyclic input.
std::vector<EndGrapeDescriptor> find_end_grapes(const Graph& g);

// Definitional re-check of a descriptor against its host graph; throws on
// any violation. find_end_grapes runs this on everything it returns.
void verify_end_grape(const Graph& g, const EndGrapeDescriptor& eg);

// Tail of x within its berry. Errors when x is the berry root.
Tail tail(const BerryDescriptor& berry, Vertex x);

// All (x, label) with the tail of x matching an opened shape template,
// including nested matches (the B7 hub inside an opened triangle+B7 tail is
// itself a docking vertex for the opened two-triangle shape). When several
// templates coincide (labels 1, 2 and 3 open to the same two-leg spider)
// the smallest label is reported; close() accepts any matching label.
std::set<std::pair<Vertex, int>> docking_vertices(const BerryDescriptor& berry);

// Opens every singular end-grape of g: per triangle berry of each, removes
// the root-w edge with the higher-id w. The result spans g and has strictly
// fewer cycles whenever anything was opened.
OpenResult open(const Graph& g);

// Opens just the given end-grape. Errors when it is not singular.
OpenResult open_local(const Graph& g, const EndGrapeDescriptor& eg);

// Exact inverse of open/open_local: re-adds the recorded edges.
Graph reclose(const Graph& g_op, const std::vector<OpeningRecord>& reopenings);

// Re-adds closing edges at the chosen docking vertices of a berry, turning
// each opened shape back into its closed form (labels 1, 2 and 5 close two
// pendant legs into triangles, labels 3, 4 and 6 close one; ties broken
// toward the leg with the smaller middle vertex). Each (x, label) is
// validated against the tail; errors on a non-docking vertex.
ClosureMap close(const BerryDescriptor& berry,
                 const std::vector<std::pair<Vertex, int>>& docking);

// Exit pattern of an end-grape under a total coloring of its root
// component: Single, or DoubleMono/DoubleBi by whether the two exit edges
// share a color.
ExitKind classify_exits(const EndGrapeDescriptor& eg, const EdgeColoring& phi0);

// Shape predicates feeding the singular classification.
bool is_triangle_berry(const BerryDescriptor& b);
bool is_b7_berry(const BerryDescriptor& b);
bool is_even_path_berry(const BerryDescriptor& b);

// Singular label for a berry multiset with the given exit count (0 = none).
int singular_label(const std::vector<BerryDescriptor>& bs, int num_exits);

}  // namespace liec
