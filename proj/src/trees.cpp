#include "liec/trees.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liec/classifier.hpp"
#include "liec/oracle.hpp"

namespace liec {

namespace {

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 &&
         g.connected();
}

bool is_bare_path(const Graph& g) {
  return is_tree(g) && g.max_degree() <= 2;
}

// All edges one color: a liec iff adjacent degrees always differ.
bool locally_irregular(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.first) == g.degree(e.second)) return false;
  }
  return true;
}

// Vertices of the subtree hanging at v when the tree edge u-v is cut,
// v-side, including v but not u.
std::vector<Vertex> subtree_vertices(const Graph& t, Vertex u, Vertex v) {
  std::vector<Vertex> out{v};
  std::set<Vertex> seen{u, v};
  for (size_t i = 0; i < out.size(); ++i) {
    for (Vertex w : t.neighbors(out[i])) {
      if (seen.insert(w).second) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeColoring swap_two_colors(const EdgeColoring& col) {
  return permute_colors(col, {{0, 1}, {1, 0}});
}

bool has_value_other_than(const std::set<int>& s, int avoid) {
  return !s.empty() && (s.size() > 1 || *s.begin() != avoid);
}

// Picks a kept subset of size kept_size such that every kept item can
// realize a value != avoid_keep and every other item one != avoid_inv.
// Items incapable of one side are forced to the other; the rest fill the
// kept quota in index order.
std::optional<std::vector<bool>> split_by_capability(
    const std::vector<std::set<int>>& options, int kept_size, int avoid_keep,
    int avoid_inv) {
  const int k = static_cast<int>(options.size());
  int forced_keep = 0;
  for (const std::set<int>& s : options) {
    bool can_keep = has_value_other_than(s, avoid_keep);
    bool can_inv = has_value_other_than(s, avoid_inv);
    if (!can_keep && !can_inv) return std::nullopt;
    if (!can_inv) ++forced_keep;
  }
  int forced_inv = 0;
  for (const std::set<int>& s : options) {
    if (!has_value_other_than(s, avoid_keep)) ++forced_inv;
  }
  if (forced_keep > kept_size || forced_inv > k - kept_size) {
    return std::nullopt;
  }
  std::vector<bool> kept(k, false);
  int quota = kept_size - forced_keep;
  for (int i = 0; i < k; ++i) {
    bool can_keep = has_value_other_than(options[i], avoid_keep);
    bool can_inv = has_value_other_than(options[i], avoid_inv);
    if (!can_inv) {
      kept[i] = true;
    } else if (can_keep && quota > 0) {
      kept[i] = true;
      --quota;
    }
  }
  return kept;
}

int pick_value(const std::set<int>& s, int avoid) {
  for (int v : s) {
    if (v != avoid) return v;
  }
  throw Error("internal: no realizable value escapes " + std::to_string(avoid));
}

// Bottom-up solver for two-color aliecs over the directed edges of a tree.
// For the shrub consisting of edge r-x plus the subtree below x, the color-0
// degree of x (root edge counted, root edge colored 0) can take several
// values depending on how the child shrubs are colored and swapped; the
// achievable sets compose upward, and any target in a set can be realized
// top-down. A two-coloring of the whole shrub exists for target a = s + 1
// iff s child edges can keep color 0 — each such child realizing a value
// different from s + 1 — while the remaining children swap to color 1,
// realizing values different from their new color degree k - s at x.
class ShrubSolver {
 public:
  explicit ShrubSolver(const Graph& t) : t_(t) {}

  const std::set<int>& achievable(Vertex r, Vertex x) {
    auto key = std::make_pair(r, x);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Vertex> children = children_of(r, x);
    const int k = static_cast<int>(children.size());
    std::vector<std::set<int>> opts;
    opts.reserve(children.size());
    for (Vertex c : children) opts.push_back(achievable(x, c));
    std::set<int> out;
    for (int s = 0; s <= k; ++s) {
      if (split_by_capability(opts, s, s + 1, k - s)) out.insert(s + 1);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  // Coloring of the shrub below x with root edge r-x colored 0 and
  // d^0(x) == a. Requires a to be achievable.
  EdgeColoring realize(Vertex r, Vertex x, int a) {
    std::vector<Vertex> children = children_of(r, x);
    const int k = static_cast<int>(children.size());
    const int s = a - 1;
    std::vector<std::set<int>> opts;
    for (Vertex c : children) opts.push_back(achievable(x, c));
    auto kept = split_by_capability(opts, s, a, k - s);
    if (s < 0 || s > k || !kept) {
      throw Error("internal: unrealizable shrub target " + std::to_string(a));
    }
    std::vector<EdgeColoring> parts;
    parts.reserve(children.size() + 1);
    for (int i = 0; i < k; ++i) {
      if ((*kept)[i]) {
        parts.push_back(realize(x, children[i], pick_value(opts[i], a)));
      } else {
        parts.push_back(swap_two_colors(
            realize(x, children[i], pick_value(opts[i], k - s))));
      }
    }
    EdgeColoring root;
    root.set(r, x, 0);
    parts.push_back(std::move(root));
    return sum_colorings(parts);
  }

 private:
  std::vector<Vertex> children_of(Vertex r, Vertex x) const {
    std::vector<Vertex> out;
    for (Vertex c : t_.neighbors(x)) {
      if (c != r) out.push_back(c);
    }
    return out;
  }

  const Graph& t_;
  std::map<std::pair<Vertex, Vertex>, std::set<int>> memo_;
};

// Exact two-color decision rooted at u: any two-color liec of t restricts
// to a two-color aliec on every branch shrub at u, so one exists iff some
// kept count s admits per-branch values avoiding s (kept) and deg(u) - s
// (swapped). Larger kept counts are preferred, so a locally irregular tree
// comes out monochromatic.
std::optional<EdgeColoring> two_color_tree_at(const Graph& t, Vertex u,
                                              ShrubSolver& solver) {
  std::vector<Vertex> nbrs = t.neighbors(u);
  const int k = static_cast<int>(nbrs.size());
  std::vector<std::set<int>> opts;
  opts.reserve(nbrs.size());
  for (Vertex v : nbrs) opts.push_back(solver.achievable(u, v));
  for (int s = k; s >= 0; --s) {
    auto kept = split_by_capability(opts, s, s, k - s);
    if (!kept) continue;
    std::vector<EdgeColoring> parts;
    parts.reserve(nbrs.size());
    for (int i = 0; i < k; ++i) {
      if ((*kept)[i]) {
        parts.push_back(solver.realize(u, nbrs[i], pick_value(opts[i], s)));
      } else {
        parts.push_back(swap_two_colors(
            solver.realize(u, nbrs[i], pick_value(opts[i], k - s))));
      }
    }
    return sum_colorings(parts);
  }
  return std::nullopt;
}

}  // namespace

Edge Shrub::root_edge() const {
  return mk_edge(root, tree.neighbors(root).front());
}

Shrub make_shrub(Graph tree, Vertex root) {
  if (!is_tree(tree)) throw Error("make_shrub: not a tree");
  if (!tree.has_vertex(root) || tree.degree(root) != 1) {
    throw Error("make_shrub: root must be a leaf");
  }
  return Shrub{std::move(tree), root};
}

EdgeColoring shrub_2aliec(const Shrub& s) {
  if (!is_tree(s.tree) || !s.tree.has_vertex(s.root) ||
      s.tree.degree(s.root) != 1) {
    throw Error("shrub_2aliec: input is not a shrub");
  }
  Vertex x = s.tree.neighbors(s.root).front();
  ShrubSolver solver(s.tree);
  const std::set<int>& a = solver.achievable(s.root, x);
  if (a.empty()) {
    // Unreachable per the solver's completeness; exact search as insurance.
    if (s.tree.num_edges() <= 16) {
      SearchResult sr = find_aliec(s.tree, s.root, 2);
      if (sr.found()) {
        EdgeColoring col = *sr.coloring;
        return col.at(s.root_edge()) == 0 ? col : swap_two_colors(col);
      }
    }
    throw Error("shrub_2aliec: no two-color aliec found");
  }
  EdgeColoring col = solver.realize(s.root, x, *a.rbegin());
  if (is_aliec(s.tree, s.root_edge(), col) == AliecStatus::Invalid) {
    throw Error("shrub_2aliec: construction produced an invalid coloring");
  }
  return col;
}

ShrubBasedColoring shrub_based_coloring(const Graph& t, Vertex u) {
  if (!is_tree(t)) throw Error("shrub_based_coloring: not a tree");
  if (!t.has_vertex(u) || t.degree(u) < 1) {
    throw Error("shrub_based_coloring: root must have a neighbor");
  }
  ShrubBasedColoring sbc;
  sbc.root = u;
  sbc.neighbors = t.neighbors(u);
  for (Vertex v : sbc.neighbors) {
    std::vector<Vertex> vs = subtree_vertices(t, u, v);
    vs.push_back(u);
    Graph shrub = t.induced(vs);
    EdgeColoring part = shrub_2aliec(Shrub{shrub, u});
    sbc.a_values.push_back(color_degree(shrub, part, v, 0));
    sbc.shrubs.push_back(std::move(shrub));
    sbc.parts.push_back(std::move(part));
  }
  sbc.sum = sum_colorings(sbc.parts);
  return sbc;
}

bool is_inversion_resistant(const Graph& t, Vertex u,
                            const ShrubBasedColoring& sbc) {
  if (sbc.root != u || static_cast<int>(sbc.parts.size()) != t.degree(u)) {
    throw Error("is_inversion_resistant: coloring does not match the root");
  }
  const int k = static_cast<int>(sbc.parts.size());
  if (k > 20) {
    throw Error("is_inversion_resistant: degree " + std::to_string(k) +
                " exceeds the 2^20 pattern budget");
  }
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    int inverted = __builtin_popcountl(mask);
    int d0 = k - inverted;
    int d1 = inverted;
    bool liec = true;
    for (int i = 0; i < k && liec; ++i) {
      bool inv = (mask >> i) & 1u;
      // Root edge i carries color 1 when swapped; it is regular iff the
      // color degree at u matches the one at the neighbor (whose own value
      // is a_values[i] in either case, colors being renamed wholesale).
      if (sbc.a_values[i] == (inv ? d1 : d0)) liec = false;
    }
    if (liec) return false;
  }
  return true;
}

EdgeColoring rainbow_root_3liec(const Graph& t, Vertex u, int special_shrub) {
  if (!is_tree(t)) throw Error("rainbow_root_3liec: not a tree");
  if (!t.has_vertex(u) || t.degree(u) != t.max_degree()) {
    throw Error("rainbow_root_3liec: root must have maximum degree");
  }
  const int k = t.degree(u);
  if (special_shrub < 0 || special_shrub >= k) {
    throw Error("rainbow_root_3liec: shrub index out of range");
  }
  ShrubSolver solver(t);
  if (two_color_tree_at(t, u, solver)) {
    throw Error(
        "rainbow_root_3liec: tree admits two colors; use tree_color");
  }
  if (k != 3 && k != 4) {
    throw Error("rainbow_root_3liec: unexpected swap-resistant root degree " +
                std::to_string(k));
  }
  ShrubBasedColoring sbc = shrub_based_coloring(t, u);
  // Role multiset over the shrubs: one keeps colors (a,b), one swaps to
  // (b,a), the chosen one is renamed to (c,b); with four shrubs a second
  // keeper joins. Which shrub plays which role is settled by trying every
  // assignment that honors the requested third-color shrub and verifying.
  std::vector<int> others;
  for (int i = 0; i < k; ++i) {
    if (i != special_shrub) others.push_back(i);
  }
  for (size_t inv_pos = 0; inv_pos < others.size(); ++inv_pos) {
    std::vector<EdgeColoring> parts(sbc.parts.size());
    parts[special_shrub] = apply_roles(sbc.parts[special_shrub], {2, 1});
    for (size_t j = 0; j < others.size(); ++j) {
      parts[others[j]] = (j == inv_pos)
                             ? apply_roles(sbc.parts[others[j]], {1, 0})
                             : sbc.parts[others[j]];
    }
    EdgeColoring cand = sum_colorings(parts);
    if (!is_liec(t, cand).ok) continue;
    ChromaticProfile prof(t, cand);
    bool root_only = prof.chromatic_count(u) == 3;
    for (Vertex v : t.vertices()) {
      if (v != u && prof.chromatic_count(v) >= 3) root_only = false;
    }
    if (root_only) return cand;
  }
  throw Error("rainbow_root_3liec: no verified role assignment found");
}

TreeColoring tree_color(const Graph& t) {
  if (!is_tree(t)) throw Error("tree_color: not a tree");
  TreeColoring out;
  if (t.num_edges() == 0) {
    out.colorable = true;
    return out;
  }
  if (is_bare_path(t) && t.num_edges() % 2 == 1) {
    return out;  // odd paths have no liec
  }
  if (locally_irregular(t)) {
    out.colorable = true;
    out.k = 1;
    for (const Edge& e : t.edges()) out.coloring.set(e, 0);
    return out;
  }
  Vertex u = -1;
  for (Vertex v : t.vertices()) {
    if (t.degree(v) == t.max_degree()) {
      u = v;
      break;
    }
  }
  ShrubSolver solver(t);
  EdgeColoring col;
  if (auto two = two_color_tree_at(t, u, solver)) {
    col = std::move(*two);
  } else {
    col = rainbow_root_3liec(t, u, 0);
  }
  if (!is_liec(t, col).ok) {
    throw Error("tree_color: constructed coloring failed verification");
  }
  out.colorable = true;
  out.k = static_cast<int>(col.used_colors().size());
  out.coloring = std::move(col);
  return out;
}

namespace {

// Two colors for lengths divisible by four, three when the remainder is
// two: blocks of aabb with a final aabbcc absorbing the remainder.
EdgeColoring bare_cycle_coloring(const std::vector<Vertex>& walk) {
  const int n = static_cast<int>(walk.size());
  EdgeColoring col;
  for (int i = 0; i < n; ++i) {
    Color c;
    if (n % 4 == 0) {
      c = (i % 4 < 2) ? 0 : 1;
    } else {
      int tail = i - (n - 6);
      if (tail < 0) {
        c = (i % 4 < 2) ? 0 : 1;
      } else {
        c = tail < 2 ? 0 : (tail < 4 ? 1 : 2);
      }
    }
    col.set(walk[i], walk[(i + 1) % n], c);
  }
  return col;
}

}  // namespace

TreeColoring unicyclic_color(const Graph& g) {
  if (!g.connected() || g.num_edges() != g.num_vertices()) {
    throw Error("unicyclic_color: not a connected unicyclic graph");
  }
  TreeColoring out;
  Classification cls = classify(g);
  if (cls.verdict != Classification::Verdict::Colorable) {
    return out;  // odd cycle or one of the unswitchable triangle trees
  }
  std::vector<Vertex> cyc = g.cycle_list().front();
  if (g.max_degree() == 2) {
    EdgeColoring col = bare_cycle_coloring(cyc);
    if (!is_liec(g, col).ok) {
      throw Error("unicyclic_color: cycle pattern failed verification");
    }
    out.colorable = true;
    out.k = static_cast<int>(col.used_colors().size());
    out.coloring = std::move(col);
    return out;
  }
  // Detach the cycle: cut one cycle edge x-y and hang its y end from a fresh
  // leaf, color the tree, then fold the leaf edge back onto x-y. The final
  // coloring is always verified whole, so any split that survives is valid;
  // splits are tried from the max-degree cycle vertex outward.
  std::vector<Vertex> splits = cyc;
  std::stable_sort(splits.begin(), splits.end(), [&](Vertex a, Vertex b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  Vertex z = g.vertices().back() + 1;
  for (Vertex x : splits) {
    std::vector<Vertex> cycle_nbrs;
    for (Vertex y : g.neighbors(x)) {
      if (std::find(cyc.begin(), cyc.end(), y) != cyc.end()) {
        cycle_nbrs.push_back(y);
      }
    }
    for (Vertex y : cycle_nbrs) {
      Graph detached = g.without_edge(x, y).with_edge(z, y);
      TreeColoring tc = tree_color(detached);
      if (!tc.colorable) continue;
      EdgeColoring base = tc.coloring;
      Color chosen = base.at(z, y);
      base.erase(mk_edge(z, y));
      for (Color c : {chosen, Color{0}, Color{1}, Color{2}}) {
        EdgeColoring cand = base;
        cand.set(x, y, c);
        if (static_cast<int>(cand.used_colors().size()) > 3) continue;
        if (!is_liec(g, cand).ok) continue;
        out.colorable = true;
        out.k = static_cast<int>(cand.used_colors().size());
        out.coloring = std::move(cand);
        return out;
      }
    }
  }
  if (g.num_edges() <= 16) {
    ChromaticIndexResult r = chromatic_index_irr(g, 3);
    if (r.value && r.witness) {
      out.colorable = true;
      out.k = *r.value;
      out.coloring = *r.witness;
      return out;
    }
  }
  throw Error("unicyclic_color: no verified coloring found");
}

}  // namespace liec
