#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liec/graph.hpp"

namespace liec {

// One growth step of the non-colorable triangle family: a degree-2 triangle
// vertex is identified with the end of an even path, or with the sole
// degree-1 vertex of a triangle carrying an odd pendant path.
struct TStep {
  enum class Kind {
    EvenPath,         // glue one end of an even-length path at `attach`
    TriangleOddPath,  // glue triangle + odd path; the path's free end is `attach`
  };
  Kind kind = Kind::EvenPath;
  Vertex attach = -1;               // degree-2 triangle vertex grown from
  std::vector<Vertex> path;         // walk from attach; even length for
                                    // EvenPath, odd for TriangleOddPath
  std::array<Vertex, 3> triangle{}; // TriangleOddPath only: the new triangle;
                                    // path.back() is one of its vertices
};

// Derivation of a member of the triangle family from its base triangle.
struct TTrace {
  std::array<Vertex, 3> base{};
  std::vector<TStep> steps;

  // Rebuilds the graph this trace describes.
  Graph replay() const;
};

// Structural membership test for the triangle family: a connected cactus
// whose cycles are vertex-disjoint triangles, where every inter-triangle
// connector path has odd length and every pendant path (allowed only at
// degree-3 triangle vertices) has even length. Returns a replayable
// derivation when the graph belongs to the family.
std::optional<TTrace> is_in_T(const Graph& g);

struct Classification {
  enum class Verdict {
    NonColorableOddPath,
    NonColorableOddCycle,
    NonColorableT,
    BowTieB,      // trims to the bow-tie: colorable, needs four colors
    GrapeBPrime,  // trims to the {B1,B1,B7} grape: three colors suffice,
                  // but no fully flavor-conforming coloring exists
    Colorable,    // three colors suffice (and no special handling applies)
  };
  Verdict verdict = Verdict::Colorable;
  std::optional<TTrace> t_trace;                // NonColorableT witness
  std::optional<std::map<Vertex, Vertex>> iso;  // trimmed graph -> template
  TrimTrace trim_trace;                         // trimming applied pre-match
  std::string note;
};

std::string to_string(Classification::Verdict v);

// Exactly one verdict per connected cactus. Errors on non-cactus input.
Classification classify(const Graph& g);

// Isomorphism of g onto a registered template graph (by name).
std::optional<std::map<Vertex, Vertex>> match_template(const Graph& g,
                                                       const std::string& name);

}  // namespace liec
