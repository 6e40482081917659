#include "liec/decomp.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>

#include "liec/iso.hpp"
#include "liec/templates.hpp"

namespace liec {

namespace {

// Vertex deletion / edge deletion that keep every surviving vertex listed,
// so components() still sees freshly isolated ones.
Graph minus_vertex(const Graph& g, Vertex u) {
  std::vector<Vertex> vs;
  for (Vertex v : g.vertices())
    if (v != u) vs.push_back(v);
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (e.first != u && e.second != u) es.push_back(e);
  return Graph::from_parts(vs, es);
}

Graph minus_edges(const Graph& g, const std::set<Edge>& rm) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (!rm.count(e)) es.push_back(e);
  return Graph::from_parts(g.vertices(), es);
}

std::map<Vertex, int> bfs_dist(const Graph& g, Vertex s) {
  std::map<Vertex, int> dist;
  dist[s] = 0;
  std::queue<Vertex> q;
  q.push(s);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist.count(w)) continue;
      dist[w] = dist[v] + 1;
      q.push(w);
    }
  }
  return dist;
}

std::vector<Vertex> bfs_path(const Graph& g, Vertex s, Vertex t) {
  std::map<Vertex, Vertex> par;
  par[s] = s;
  std::queue<Vertex> q;
  q.push(s);
  while (!q.empty() && !par.count(t)) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (par.count(w)) continue;
      par[w] = v;
      q.push(w);
    }
  }
  if (!par.count(t)) throw Error("bfs_path: endpoints disconnected");
  std::vector<Vertex> path{t};
  while (path.back() != s) path.push_back(par[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

BerryDescriptor make_berry(const Graph& g, Vertex root,
                           const std::vector<Vertex>& comp) {
  BerryDescriptor b;
  b.root = root;
  std::vector<Vertex> vs = comp;
  vs.push_back(root);
  b.subgraph = g.induced(vs);
  const std::vector<Vertex>& attach = b.subgraph.neighbors(root);
  if (attach.empty() || attach.size() > 2) {
    throw Error("berry at " + std::to_string(root) + " attaches " +
                std::to_string(attach.size()) + " times; not a cactus grape");
  }
  b.v = attach.front();
  if (attach.size() == 2) {
    b.kind = BerryKind::Unicyclic;
    b.w = attach.back();
    Graph inner = minus_vertex(b.subgraph, root);
    b.cycle.push_back(root);
    for (Vertex x : bfs_path(inner, b.v, *b.w)) b.cycle.push_back(x);
  } else {
    b.kind = BerryKind::Acyclic;
  }
  return b;
}

const Graph& opened_template(int label) {
  static const std::array<Graph, 7> t = {
      Graph(),
      tmpl::endgrape_A_open(1), tmpl::endgrape_A_open(2),
      tmpl::endgrape_A_open(3), tmpl::endgrape_A_open(4),
      tmpl::endgrape_A_open(5), tmpl::endgrape_A_open(6)};
  if (label < 1 || label > 6) throw Error("no opened shape with that label");
  return t[label];
}

bool is_even_pendant_path(const Graph& t, Vertex anchor) {
  if (t.num_vertices() == 1) return true;  // length zero
  return t.max_degree() <= 2 && t.degree(anchor) == 1 &&
         t.num_edges() % 2 == 0;
}

// Triangle berry with even pendant paths (possibly empty) at its two
// non-root cycle vertices: the non-colorable single-berry shape.
bool b2_star_shape(const EndGrapeDescriptor& eg) {
  if (eg.berries.size() != 1 || eg.exit_edges.size() != 1) return false;
  const BerryDescriptor& b = eg.berries.front();
  if (b.kind != BerryKind::Unicyclic || b.cycle.size() != 3) return false;
  for (Vertex x : {b.v, *b.w}) {
    Tail t = tail(b, x);
    if (!is_even_pendant_path(t.subgraph, x)) return false;
  }
  return true;
}

OpeningRecord open_record(const EndGrapeDescriptor& eg) {
  OpeningRecord rec{eg.root, eg.singular, {}};
  for (const BerryDescriptor& b : eg.berries) {
    if (is_triangle_berry(b)) rec.removed.push_back(mk_edge(eg.root, *b.w));
  }
  return rec;
}

// End-grape rooted at u, if any: collect the components of g - u that form
// berries (trees met once, or met twice with the only cycle through u); the
// rest must be a single component, reached by one or two exit edges, and at
// least one berry must carry a cycle.
std::optional<EndGrapeDescriptor> end_grape_at(const Graph& g, Vertex u) {
  Graph rest = minus_vertex(g, u);
  std::vector<std::vector<Vertex>> good;
  int bad = 0;
  std::vector<Vertex> exit_neighbors;
  for (const std::vector<Vertex>& comp : rest.components()) {
    std::vector<Vertex> vs = comp;
    vs.push_back(u);
    Graph sub = g.induced(vs);
    size_t att = sub.neighbors(u).size();
    size_t ncyc = sub.cycle_list().size();
    bool berry_like = (att == 1 && ncyc == 0) || (att == 2 && ncyc == 1);
    if (berry_like) {
      good.push_back(comp);
    } else {
      ++bad;
      for (Vertex n : sub.neighbors(u)) exit_neighbors.push_back(n);
    }
  }
  if (bad != 1 || exit_neighbors.size() > 2) return std::nullopt;

  EndGrapeDescriptor eg;
  eg.root = u;
  for (const std::vector<Vertex>& comp : good)
    eg.berries.push_back(make_berry(g, u, comp));
  bool has_cycle = false;
  for (const BerryDescriptor& b : eg.berries)
    if (b.kind == BerryKind::Unicyclic) has_cycle = true;
  if (!has_cycle) return std::nullopt;
  std::sort(eg.berries.begin(), eg.berries.end(),
            [](const BerryDescriptor& a, const BerryDescriptor& b) {
              return a.v < b.v;
            });

  std::set<Vertex> gu_vs{u};
  std::set<Edge> gu_es;
  for (const BerryDescriptor& b : eg.berries) {
    for (Vertex v : b.subgraph.vertices()) gu_vs.insert(v);
    for (const Edge& e : b.subgraph.edges()) gu_es.insert(e);
  }
  eg.subgraph = Graph::from_parts({gu_vs.begin(), gu_vs.end()},
                                  {gu_es.begin(), gu_es.end()});

  for (Vertex n : exit_neighbors) eg.exit_edges.push_back(mk_edge(u, n));
  std::sort(eg.exit_edges.begin(), eg.exit_edges.end());
  if (eg.exit_edges.size() == 1) eg.exit_kind = ExitKind::Single;

  std::vector<Vertex> g0_vs;
  for (Vertex v : g.vertices())
    if (v == u || !gu_vs.count(v)) g0_vs.push_back(v);
  eg.root_component = g.induced(g0_vs);

  eg.singular =
      singular_label(eg.berries, static_cast<int>(eg.exit_edges.size()));
  eg.b2_star = b2_star_shape(eg);
  return eg;
}

}  // namespace

Vertex EndGrapeDescriptor::u1() const {
  if (exit_edges.empty()) throw Error("u1: end-grape has no exit edges");
  const Edge& e = exit_edges.front();
  return e.first == root ? e.second : e.first;
}

Vertex EndGrapeDescriptor::u2() const {
  if (exit_edges.size() < 2) throw Error("u2: end-grape has a single exit");
  const Edge& e = exit_edges.back();
  return e.first == root ? e.second : e.first;
}

Vertex EndGrapeDescriptor::v1() const {
  for (const BerryDescriptor& b : berries)
    if (b.kind == BerryKind::Unicyclic) return b.v;
  throw Error("v1: end-grape has no unicyclic berry");
}

Graph EndGrapeDescriptor::g0_prime() const {
  return root_component.with_edge(root, v1());
}

std::optional<Vertex> grape_root(const Graph& g) {
  std::vector<std::vector<Vertex>> cycles = g.cycle_list();
  if (cycles.empty()) throw Error("grape_root: acyclic input");
  std::set<Vertex> common(cycles.front().begin(), cycles.front().end());
  for (size_t i = 1; i < cycles.size() && !common.empty(); ++i) {
    std::set<Vertex> ci(cycles[i].begin(), cycles[i].end());
    std::set<Vertex> keep;
    for (Vertex v : common)
      if (ci.count(v)) keep.insert(v);
    common.swap(keep);
  }
  if (common.empty()) return std::nullopt;
  // Unique when there are two or more cycles; for a lone cycle pick the
  // smallest of its vertices.
  return *common.begin();
}

std::vector<BerryDescriptor> berries(const Graph& g, Vertex root) {
  if (!g.has_vertex(root)) {
    throw Error("berries: root " + std::to_string(root) + " not in graph");
  }
  std::vector<BerryDescriptor> out;
  for (const std::vector<Vertex>& comp : minus_vertex(g, root).components())
    out.push_back(make_berry(g, root, comp));
  std::sort(out.begin(), out.end(),
            [](const BerryDescriptor& a, const BerryDescriptor& b) {
              return a.v < b.v;
            });
  return out;
}

std::vector<EndGrapeDescriptor> find_end_grapes(const Graph& g) {
  if (!g.is_cactus()) throw Error("find_end_grapes: input is not a cactus");
  if (g.cycle_list().empty()) throw Error("find_end_grapes: acyclic input");
  if (grape_root(g).has_value()) {
    throw Error(
        "find_end_grapes: input is a grape; use the grape coloring path");
  }
  std::vector<EndGrapeDescriptor> out;
  for (Vertex u : g.vertices()) {
    std::optional<EndGrapeDescriptor> eg = end_grape_at(g, u);
    if (!eg) continue;
    verify_end_grape(g, *eg);
    out.push_back(std::move(*eg));
  }
  return out;  // vertices() is sorted, so roots ascend
}

void verify_end_grape(const Graph& g, const EndGrapeDescriptor& eg) {
  auto fail = [](const std::string& what) {
    throw Error("end-grape verification failed: " + what);
  };
  if (!g.has_vertex(eg.root)) fail("root not in graph");
  if (eg.exit_edges.empty() || eg.exit_edges.size() > 2)
    fail("exit edge count");

  // Berries partition the end-grape's edges.
  std::set<Edge> gu_es(eg.subgraph.edges().begin(), eg.subgraph.edges().end());
  size_t berry_edge_sum = 0;
  for (const BerryDescriptor& b : eg.berries) {
    berry_edge_sum += b.subgraph.edges().size();
    for (const Edge& e : b.subgraph.edges())
      if (!gu_es.count(e)) fail("berry edge outside the end-grape");
  }
  if (berry_edge_sum != gu_es.size()) fail("berries do not partition edges");

  // Only the root touches the rest of the graph.
  for (Vertex x : eg.subgraph.vertices()) {
    if (x == eg.root) continue;
    if (g.degree(x) != eg.subgraph.degree(x)) fail("interior vertex escapes");
  }

  // Exit edges are exactly the root's edges that leave the end-grape.
  std::set<Edge> exits_found;
  for (Vertex n : g.neighbors(eg.root)) {
    Edge e = mk_edge(eg.root, n);
    if (!gu_es.count(e)) exits_found.insert(e);
  }
  if (exits_found != std::set<Edge>(eg.exit_edges.begin(),
                                    eg.exit_edges.end()))
    fail("exit edges mismatch");

  // The end-grape is a grape with at least one cycle, rooted at eg.root.
  std::vector<std::vector<Vertex>> cycles = eg.subgraph.cycle_list();
  if (cycles.empty()) fail("no cycle");
  for (const std::vector<Vertex>& c : cycles) {
    if (std::find(c.begin(), c.end(), eg.root) == c.end())
      fail("cycle avoiding the root");
  }

  // End-grape plus root component account for the whole graph.
  std::set<Edge> g0_es(eg.root_component.edges().begin(),
                       eg.root_component.edges().end());
  if (gu_es.size() + g0_es.size() != g.edges().size())
    fail("edge split does not cover the graph");
  for (const Edge& e : g0_es)
    if (gu_es.count(e)) fail("edge on both sides of the split");

  // Two exit edges must close a cycle through the root component.
  if (eg.exit_edges.size() == 2) {
    Graph r0 = minus_vertex(eg.root_component, eg.root);
    Vertex a = eg.u1(), b = eg.u2();
    bool together = false;
    for (const std::vector<Vertex>& comp : r0.components()) {
      bool ha = std::find(comp.begin(), comp.end(), a) != comp.end();
      bool hb = std::find(comp.begin(), comp.end(), b) != comp.end();
      if (ha && hb) together = true;
      if (ha != hb) together = false;
      if (ha || hb) break;
    }
    if (!together) fail("exit edges lie on no common cycle");
  }
}

Tail tail(const BerryDescriptor& berry, Vertex x) {
  if (x == berry.root) throw Error("tail: x is the berry root");
  if (!berry.subgraph.has_vertex(x))
    throw Error("tail: vertex " + std::to_string(x) + " not in berry");
  const Graph& B = berry.subgraph;
  Graph cut;
  if (berry.is_cyclic(x)) {
    std::set<Edge> rm;
    for (size_t i = 0; i < berry.cycle.size(); ++i) {
      rm.insert(mk_edge(berry.cycle[i],
                        berry.cycle[(i + 1) % berry.cycle.size()]));
    }
    cut = minus_edges(B, rm);
  } else {
    std::map<Vertex, int> dist = bfs_dist(B, berry.root);
    Vertex parent = -1;
    for (Vertex y : B.neighbors(x)) {
      if (dist.at(y) < dist.at(x)) {
        parent = y;
        break;
      }
    }
    if (parent < 0) throw Error("tail: no parent toward the root");
    cut = minus_edges(B, {mk_edge(x, parent)});
  }
  for (const std::vector<Vertex>& comp : cut.components()) {
    if (std::find(comp.begin(), comp.end(), x) != comp.end())
      return Tail{x, cut.induced(comp)};
  }
  throw Error("tail: anchor lost its component");
}

std::set<std::pair<Vertex, int>> docking_vertices(
    const BerryDescriptor& berry) {
  std::set<std::pair<Vertex, int>> out;
  for (Vertex x : berry.subgraph.vertices()) {
    if (x == berry.root) continue;
    Tail t = tail(berry, x);
    for (int i = 1; i <= 6; ++i) {
      if (rooted_isomorphic(t.subgraph, x, opened_template(i),
                            tmpl::berry_root())) {
        out.insert({x, i});
        break;
      }
    }
  }
  return out;
}

OpenResult open(const Graph& g) {
  OpenResult res{g, {}};
  for (const EndGrapeDescriptor& eg : find_end_grapes(g)) {
    if (eg.singular == 0) continue;
    res.reopenings.push_back(open_record(eg));
  }
  for (const OpeningRecord& rec : res.reopenings)
    for (const Edge& e : rec.removed)
      res.g_op = res.g_op.without_edge(e.first, e.second);
  return res;
}

OpenResult open_local(const Graph& g, const EndGrapeDescriptor& eg) {
  if (eg.singular == 0) {
    throw Error("open_local: end-grape is not one of the singular shapes");
  }
  OpenResult res{g, {open_record(eg)}};
  for (const Edge& e : res.reopenings.front().removed)
    res.g_op = res.g_op.without_edge(e.first, e.second);
  return res;
}

Graph reclose(const Graph& g_op,
              const std::vector<OpeningRecord>& reopenings) {
  Graph g = g_op;
  for (const OpeningRecord& rec : reopenings)
    for (const Edge& e : rec.removed) g = g.with_edge(e.first, e.second);
  return g;
}

ClosureMap close(const BerryDescriptor& berry,
                 const std::vector<std::pair<Vertex, int>>& docking) {
  // Triangles restored per shape: both pendant legs for the two-triangle
  // shapes (1, 2) and the pair inside two-triangles-plus-B7 (5); one leg for
  // the shapes with a single triangle (3, 4, 6).
  static const std::array<int, 7> kLegs = {0, 2, 2, 1, 1, 2, 1};

  ClosureMap cm;
  cm.berry_root = berry.root;
  cm.berry_subgraph = berry.subgraph;
  cm.docking = docking;
  std::sort(cm.docking.begin(), cm.docking.end());
  for (size_t i = 1; i < cm.docking.size(); ++i) {
    if (cm.docking[i].first == cm.docking[i - 1].first)
      throw Error("close: duplicate docking vertex");
  }

  Graph cur = berry.subgraph;
  for (const auto& [x, label] : cm.docking) {
    if (label < 1 || label > 6) throw Error("close: invalid shape label");
    Tail t = tail(berry, x);
    if (!rooted_isomorphic(t.subgraph, x, opened_template(label),
                           tmpl::berry_root())) {
      throw Error("close: vertex " + std::to_string(x) +
                  " is not a docking vertex for that shape");
    }
    // Pendant length-2 legs at x inside the tail; closing adds the missing
    // anchor-leaf edge of each.
    std::vector<std::pair<Vertex, Vertex>> legs;  // (middle, leaf)
    for (Vertex m : t.subgraph.neighbors(x)) {
      if (t.subgraph.degree(m) != 2) continue;
      for (Vertex l : t.subgraph.neighbors(m)) {
        if (l != x && t.subgraph.degree(l) == 1) legs.push_back({m, l});
      }
    }
    std::sort(legs.begin(), legs.end());
    int need = kLegs[label];
    if (static_cast<int>(legs.size()) < need)
      throw Error("close: opened legs missing at " + std::to_string(x));
    for (int j = 0; j < need; ++j) {
      Edge ce = mk_edge(x, legs[j].second);
      cur = cur.with_edge(ce.first, ce.second);
      cm.closing_edges[x].push_back(ce);
    }
  }
  cm.g_cl = cur;
  return cm;
}

ExitKind classify_exits(const EndGrapeDescriptor& eg,
                        const EdgeColoring& phi0) {
  if (eg.exit_edges.size() == 1) return ExitKind::Single;
  if (eg.exit_edges.size() != 2)
    throw Error("classify_exits: malformed exit edges");
  return phi0.at(eg.exit_edges.front()) == phi0.at(eg.exit_edges.back())
             ? ExitKind::DoubleMono
             : ExitKind::DoubleBi;
}

bool is_triangle_berry(const BerryDescriptor& b) {
  return b.kind == BerryKind::Unicyclic && b.subgraph.num_edges() == 3;
}

bool is_b7_berry(const BerryDescriptor& b) {
  if (b.kind != BerryKind::Acyclic || b.subgraph.num_edges() != 5)
    return false;
  static const Graph t = tmpl::berry_B7();
  return rooted_isomorphic(b.subgraph, b.root, t, tmpl::berry_root());
}

bool is_even_path_berry(const BerryDescriptor& b) {
  return b.kind == BerryKind::Acyclic && b.subgraph.num_edges() >= 2 &&
         b.subgraph.num_edges() % 2 == 0 && b.subgraph.max_degree() <= 2 &&
         b.subgraph.degree(b.root) == 1;
}

int singular_label(const std::vector<BerryDescriptor>& bs, int num_exits) {
  if (num_exits < 1 || num_exits > 2) return 0;
  int nt = 0, nb7 = 0, np = 0, other = 0;
  for (const BerryDescriptor& b : bs) {
    if (is_triangle_berry(b))
      ++nt;
    else if (is_b7_berry(b))
      ++nb7;
    else if (is_even_path_berry(b))
      ++np;
    else
      ++other;
  }
  if (other > 0) return 0;
  if (nt == 2 && nb7 == 0 && np == 0) return num_exits == 1 ? 1 : 2;
  if (nt == 1 && nb7 == 0 && np == 1) return 3;
  if (nt == 1 && nb7 == 1 && np == 0) return 4;
  if (nt == 2 && nb7 == 1 && np == 0 && num_exits == 2) return 5;
  if (nt == 1 && nb7 == 2 && np == 0 && num_exits == 2) return 6;
  return 0;
}

}  // namespace liec
