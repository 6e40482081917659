#include "liec/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace liec {

Graph Graph::build(std::vector<Vertex> verts, std::vector<Edge> edges,
                   bool* duplicate_warning) {
  Graph g;
  std::set<Vertex> vset(verts.begin(), verts.end());
  std::set<Edge> eset;
  bool dup = false;
  for (const Edge& e : edges) {
    if (e.first == e.second) {
      throw Error("loop edge rejected: " + std::to_string(e.first) + "-" +
                  std::to_string(e.second));
    }
    if (e.first < 0 || e.second < 0) {
      throw Error("negative vertex id in edge " + std::to_string(e.first) +
                  "-" + std::to_string(e.second));
    }
    Edge c = mk_edge(e.first, e.second);
    if (!eset.insert(c).second) dup = true;
    vset.insert(c.first);
    vset.insert(c.second);
  }
  for (Vertex v : vset) {
    if (v < 0) throw Error("negative vertex id " + std::to_string(v));
  }
  if (duplicate_warning) *duplicate_warning = dup;
  g.verts_.assign(vset.begin(), vset.end());
  g.edges_.assign(eset.begin(), eset.end());
  for (Vertex v : g.verts_) g.adj_[v];  // ensure entry exists
  for (const Edge& e : g.edges_) {
    g.adj_[e.first].push_back(e.second);
    g.adj_[e.second].push_back(e.first);
  }
  for (auto& [v, nbrs] : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::from_edges(const std::vector<Edge>& edges,
                        bool* duplicate_warning) {
  return build({}, edges, duplicate_warning);
}

Graph Graph::from_parts(const std::vector<Vertex>& vertices,
                        const std::vector<Edge>& edges,
                        bool* duplicate_warning) {
  return build(vertices, edges, duplicate_warning);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(edges_.begin(), edges_.end(), mk_edge(u, v));
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw Error("vertex " + std::to_string(v) + " not in graph");
  }
  return it->second;
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& [v, nbrs] : adj_) d = std::max(d, (int)nbrs.size());
  return d;
}

std::vector<Vertex> Graph::leaves() const {
  std::vector<Vertex> out;
  for (const auto& [v, nbrs] : adj_)
    if (nbrs.size() == 1) out.push_back(v);
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  if (u == v) throw Error("with_edge: loop rejected");
  if (has_edge(u, v)) {
    throw Error("with_edge: edge " + std::to_string(u) + "-" +
                std::to_string(v) + " already present");
  }
  std::vector<Edge> es = edges_;
  es.push_back(mk_edge(u, v));
  return build(verts_, es, nullptr);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (!has_edge(u, v)) {
    throw Error("without_edge: edge " + std::to_string(u) + "-" +
                std::to_string(v) + " not present");
  }
  Edge c = mk_edge(u, v);
  std::vector<Edge> es;
  for (const Edge& e : edges_)
    if (e != c) es.push_back(e);
  // Endpoints that just became isolated are dropped; other vertices stay.
  std::vector<Vertex> keep;
  for (Vertex w : verts_) {
    if ((w == u || w == v) && degree(w) == 1) continue;
    keep.push_back(w);
  }
  return build(keep, es, nullptr);
}

Graph Graph::without_vertex(Vertex v) const {
  if (!has_vertex(v)) {
    throw Error("without_vertex: vertex " + std::to_string(v) +
                " not in graph");
  }
  std::vector<Edge> es;
  for (const Edge& e : edges_)
    if (e.first != v && e.second != v) es.push_back(e);
  std::vector<Vertex> keep;
  for (Vertex w : verts_) {
    if (w == v) continue;
    // Neighbors of v that had no other edge become isolated and are dropped.
    if (degree(w) >= 1 && has_edge(w, v) && degree(w) == 1) continue;
    keep.push_back(w);
  }
  return build(keep, es, nullptr);
}

Graph Graph::induced(const std::vector<Vertex>& vs) const {
  std::set<Vertex> keep(vs.begin(), vs.end());
  for (Vertex v : keep) {
    if (!has_vertex(v)) {
      throw Error("induced: vertex " + std::to_string(v) + " not in graph");
    }
  }
  std::vector<Edge> es;
  for (const Edge& e : edges_)
    if (keep.count(e.first) && keep.count(e.second)) es.push_back(e);
  return build(std::vector<Vertex>(keep.begin(), keep.end()), es, nullptr);
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::set<Vertex> seen;
  for (Vertex s : verts_) {
    if (seen.count(s)) continue;
    std::vector<Vertex> comp, stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : neighbors(v)) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return components().size() <= 1; }

std::vector<Graph::Block> Graph::blocks() const {
  // Iterative lowpoint DFS with an edge stack.
  std::vector<Block> out;
  std::map<Vertex, int> disc, low;
  std::vector<Edge> estack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    size_t ni;  // next neighbor index
  };

  auto emit_block = [&](const Edge& top) {
    Block b;
    std::set<Edge> es;
    while (!estack.empty()) {
      Edge e = estack.back();
      estack.pop_back();
      es.insert(e);
      if (e == top) break;
    }
    std::set<Vertex> vs;
    for (const Edge& e : es) {
      vs.insert(e.first);
      vs.insert(e.second);
    }
    b.edges.assign(es.begin(), es.end());
    b.vertices.assign(vs.begin(), vs.end());
    out.push_back(std::move(b));
  };

  for (Vertex root : verts_) {
    if (disc.count(root)) continue;
    std::vector<Frame> fstack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!fstack.empty()) {
      Frame& f = fstack.back();
      const auto& nbrs = neighbors(f.v);
      if (f.ni < nbrs.size()) {
        Vertex w = nbrs[f.ni++];
        if (!disc.count(w)) {
          estack.push_back(mk_edge(f.v, w));
          disc[w] = low[w] = timer++;
          fstack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          estack.push_back(mk_edge(f.v, w));
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        fstack.pop_back();
        if (!fstack.empty()) {
          Frame& up = fstack.back();
          low[up.v] = std::min(low[up.v], low[done.v]);
          if (low[done.v] >= disc[up.v]) {
            emit_block(mk_edge(up.v, done.v));
          }
        }
      }
    }
  }
  return out;
}

bool Graph::is_cactus() const {
  if (!connected()) throw Error("is_cactus: graph is disconnected");
  for (const Block& b : blocks()) {
    if (!b.is_bridge() && !b.is_cycle()) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> Graph::cycle_list() const {
  if (!is_cactus()) throw Error("cycle_list: graph is not a cactus");
  std::vector<std::vector<Vertex>> cycles;
  for (const Block& b : blocks()) {
    if (!b.is_cycle()) continue;
    std::set<Edge> es(b.edges.begin(), b.edges.end());
    std::map<Vertex, std::vector<Vertex>> badj;
    for (const Edge& e : b.edges) {
      badj[e.first].push_back(e.second);
      badj[e.second].push_back(e.first);
    }
    for (auto& [v, ns] : badj) std::sort(ns.begin(), ns.end());
    Vertex start = b.vertices.front();
    std::vector<Vertex> walk{start};
    Vertex prev = start, cur = badj[start][0];
    while (cur != start) {
      walk.push_back(cur);
      const auto& ns = badj[cur];
      Vertex nxt = (ns[0] == prev) ? ns[1] : ns[0];
      prev = cur;
      cur = nxt;
    }
    cycles.push_back(std::move(walk));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ", ";
    first = false;
    os << e.first << "-" << e.second;
  }
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 0) {
      if (!first) os << ", ";
      first = false;
      os << v;
    }
  }
  os << "}";
  return os.str();
}

std::vector<PendantPath> pendant_paths(const Graph& g) {
  std::vector<PendantPath> out;
  for (Vertex leaf : g.leaves()) {
    PendantPath p;
    p.path.push_back(leaf);
    Vertex prev = leaf, cur = g.neighbors(leaf)[0];
    while (g.degree(cur) == 2) {
      p.path.push_back(cur);
      const auto& ns = g.neighbors(cur);
      Vertex nxt = (ns[0] == prev) ? ns[1] : ns[0];
      prev = cur;
      cur = nxt;
    }
    p.path.push_back(cur);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Ear> ears(const Graph& g) {
  std::vector<Ear> out;
  std::set<std::vector<Edge>> seen;
  for (Vertex x0 : g.vertices()) {
    if (g.degree(x0) < 3) continue;
    for (Vertex n : g.neighbors(x0)) {
      if (g.degree(n) != 2) continue;
      Ear ear;
      ear.path.push_back(x0);
      Vertex prev = x0, cur = n;
      while (g.degree(cur) == 2) {
        ear.path.push_back(cur);
        const auto& ns = g.neighbors(cur);
        Vertex nxt = (ns[0] == prev) ? ns[1] : ns[0];
        prev = cur;
        cur = nxt;
      }
      if (g.degree(cur) == 1) continue;  // pendant path, not an ear
      ear.path.push_back(cur);
      ear.closed = (cur == x0);
      // Canonical orientation: start at the smaller endpoint; closed ears
      // walk toward the smaller first internal.
      if (!ear.closed && ear.path.front() > ear.path.back()) continue;
      if (ear.closed && ear.path[1] > ear.path[ear.path.size() - 2]) continue;
      std::vector<Edge> key;
      for (size_t i = 0; i + 1 < ear.path.size(); ++i)
        key.push_back(mk_edge(ear.path[i], ear.path[i + 1]));
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) out.push_back(std::move(ear));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Ear& a, const Ear& b) { return a.path < b.path; });
  return out;
}

namespace {

// The whole graph is one cycle (every vertex degree 2, connected).
bool is_bare_cycle(const Graph& g) {
  if (g.num_vertices() < 3 || g.num_edges() != g.num_vertices()) return false;
  for (Vertex v : g.vertices())
    if (g.degree(v) != 2) return false;
  return true;
}

Ear bare_cycle_as_ear(const Graph& g) {
  Ear ear;
  ear.closed = true;
  Vertex start = g.vertices().front();
  ear.path.push_back(start);
  Vertex prev = start, cur = g.neighbors(start)[0];
  while (cur != start) {
    ear.path.push_back(cur);
    const auto& ns = g.neighbors(cur);
    Vertex nxt = (ns[0] == prev) ? ns[1] : ns[0];
    prev = cur;
    cur = nxt;
  }
  ear.path.push_back(start);
  return ear;
}

Graph apply_pendant_shorten(const Graph& g, const PendantPath& p,
                            TrimStep* step) {
  Vertex v0 = p.path[0], v1 = p.path[1], v2 = p.path[2];
  step->kind = TrimStep::Kind::PendantShorten;
  step->anchor = p.anchor();
  step->removed_leaf = v0;
  step->removed_next = v1;
  step->attach = v2;
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (e == mk_edge(v0, v1) || e == mk_edge(v1, v2)) continue;
    es.push_back(e);
  }
  std::vector<Vertex> vs;
  for (Vertex v : g.vertices())
    if (v != v0 && v != v1) vs.push_back(v);
  return Graph::from_parts(vs, es);
}

Graph apply_ear_shorten(const Graph& g, const Ear& ear, TrimStep* step) {
  const auto& p = ear.path;
  Vertex x0 = p[0], x1 = p[1], x2 = p[2], x3 = p[3];
  step->kind = TrimStep::Kind::EarShorten;
  step->anchor = x0;
  step->ear_before = p;
  step->ear_after.clear();
  step->ear_after.push_back(x0);
  for (size_t i = 3; i < p.size(); ++i) step->ear_after.push_back(p[i]);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (e == mk_edge(x0, x1) || e == mk_edge(x1, x2) || e == mk_edge(x2, x3))
      continue;
    es.push_back(e);
  }
  es.push_back(mk_edge(x0, x3));
  std::vector<Vertex> vs;
  for (Vertex v : g.vertices())
    if (v != x1 && v != x2) vs.push_back(v);
  return Graph::from_parts(vs, es);
}

}  // namespace

std::pair<Graph, TrimTrace> trim(const Graph& g) {
  if (!g.connected()) throw Error("trim: graph is disconnected");
  Graph cur = g;
  TrimTrace trace;
  for (;;) {
    // Pendant shortenings first.
    std::vector<PendantPath> pend;
    for (const PendantPath& p : pendant_paths(cur))
      if (p.length() >= 3) pend.push_back(p);
    if (!pend.empty()) {
      std::sort(pend.begin(), pend.end(),
                [](const PendantPath& a, const PendantPath& b) {
                  if (a.anchor() != b.anchor()) return a.anchor() < b.anchor();
                  return a.leaf() < b.leaf();
                });
      TrimStep step;
      cur = apply_pendant_shorten(cur, pend.front(), &step);
      trace.steps.push_back(std::move(step));
      continue;
    }
    // Then ear shortenings (smallest start vertex, then first internal).
    std::vector<Ear> longears;
    for (const Ear& e : ears(cur))
      if (e.length() >= 5) longears.push_back(e);
    if (!longears.empty()) {
      TrimStep step;
      cur = apply_ear_shorten(cur, longears.front(), &step);
      trace.steps.push_back(std::move(step));
      continue;
    }
    // A bare cycle of length >= 6 is a closed ear with no branch vertex.
    if (is_bare_cycle(cur) && cur.num_edges() >= 6) {
      TrimStep step;
      cur = apply_ear_shorten(cur, bare_cycle_as_ear(cur), &step);
      trace.steps.push_back(std::move(step));
      continue;
    }
    break;
  }
  return {cur, trace};
}

bool is_trimmed(const Graph& g) {
  for (const PendantPath& p : pendant_paths(g))
    if (p.length() >= 3) return false;
  for (const Ear& e : ears(g))
    if (e.length() >= 5) return false;
  if (is_bare_cycle(g) && g.num_edges() >= 6) return false;
  return true;
}

Graph TrimTrace::rebuild(const Graph& trimmed) const {
  Graph cur = trimmed;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const TrimStep& s = *it;
    if (s.kind == TrimStep::Kind::PendantShorten) {
      if (!cur.has_vertex(s.attach)) {
        throw Error("rebuild: attach vertex " + std::to_string(s.attach) +
                    " missing");
      }
      cur = cur.with_edge(s.attach, s.removed_next);
      cur = cur.with_edge(s.removed_next, s.removed_leaf);
    } else {
      const auto& before = s.ear_before;
      Vertex x0 = before[0], x1 = before[1], x2 = before[2], x3 = before[3];
      cur = cur.without_edge(x0, x3);
      cur = cur.with_edge(x0, x1);
      cur = cur.with_edge(x1, x2);
      cur = cur.with_edge(x2, x3);
    }
  }
  return cur;
}

}  // namespace liec
