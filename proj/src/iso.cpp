#include "liec/iso.hpp"

#include <algorithm>
#include <set>

namespace liec {

namespace {

// Multiset of (degree, sorted neighbor degrees) — cheap invariant.
std::multiset<std::pair<int, std::vector<int>>> degree_profile(const Graph& g) {
  std::multiset<std::pair<int, std::vector<int>>> out;
  for (Vertex v : g.vertices()) {
    std::vector<int> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    out.insert({g.degree(v), nd});
  }
  return out;
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<Vertex> order;  // vertices of a, connectivity-first
  std::map<Vertex, Vertex> fwd;
  std::set<Vertex> used;
  Vertex pin_a = -1;  // when >= 0, pin_a must map to pin_b
  Vertex pin_b = -1;

  bool consistent(Vertex va, Vertex vb) const {
    if (a.degree(va) != b.degree(vb)) return false;
    for (const auto& [x, y] : fwd) {
      if (a.has_edge(va, x) != b.has_edge(vb, y)) return false;
    }
    return true;
  }

  bool rec(size_t i) {
    if (i == order.size()) return true;
    Vertex va = order[i];
    for (Vertex vb : b.vertices()) {
      if (va == pin_a && vb != pin_b) continue;
      if (va != pin_a && vb == pin_b) continue;
      if (used.count(vb) || !consistent(va, vb)) continue;
      fwd[va] = vb;
      used.insert(vb);
      if (rec(i + 1)) return true;
      fwd.erase(va);
      used.erase(vb);
    }
    return false;
  }
};

// Order a's vertices so each one touches an earlier one when possible,
// highest degree first among eligible; optionally seeded with a start vertex.
std::vector<Vertex> search_order(const Graph& a, Vertex seed) {
  std::vector<Vertex> order;
  std::set<Vertex> placed;
  if (seed >= 0) {
    order.push_back(seed);
    placed.insert(seed);
  }
  while (order.size() < a.vertices().size()) {
    Vertex next = -1;
    int best_deg = -1;
    for (Vertex v : a.vertices()) {
      if (placed.count(v)) continue;
      bool touches = false;
      for (Vertex w : a.neighbors(v)) {
        if (placed.count(w)) {
          touches = true;
          break;
        }
      }
      if (!placed.empty() && !touches) continue;
      if (a.degree(v) > best_deg) {
        best_deg = a.degree(v);
        next = v;
      }
    }
    if (next == -1) {
      // New component: take the highest-degree unplaced vertex.
      for (Vertex v : a.vertices()) {
        if (!placed.count(v) && a.degree(v) > best_deg) {
          best_deg = a.degree(v);
          next = v;
        }
      }
    }
    placed.insert(next);
    order.push_back(next);
  }
  return order;
}

}  // namespace

std::optional<std::map<Vertex, Vertex>> find_isomorphism(const Graph& a,
                                                         const Graph& b) {
  if (a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges()) {
    return std::nullopt;
  }
  if (degree_profile(a) != degree_profile(b)) return std::nullopt;

  IsoSearch s{a, b, search_order(a, -1), {}, {}};
  if (s.rec(0)) return s.fwd;
  return std::nullopt;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

std::optional<std::map<Vertex, Vertex>> find_rooted_isomorphism(const Graph& a,
                                                                Vertex ra,
                                                                const Graph& b,
                                                                Vertex rb) {
  if (!a.has_vertex(ra) || !b.has_vertex(rb)) {
    throw Error("find_rooted_isomorphism: root not in graph");
  }
  if (a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges()) {
    return std::nullopt;
  }
  if (a.degree(ra) != b.degree(rb)) return std::nullopt;
  if (degree_profile(a) != degree_profile(b)) return std::nullopt;

  IsoSearch s{a, b, search_order(a, ra), {}, {}, ra, rb};
  if (s.rec(0)) return s.fwd;
  return std::nullopt;
}

bool rooted_isomorphic(const Graph& a, Vertex ra, const Graph& b, Vertex rb) {
  return find_rooted_isomorphism(a, ra, b, rb).has_value();
}

namespace {

struct CanonSearch {
  const Graph& g;
  std::vector<Vertex> verts;
  int n;
  std::string best;           // best full string found so far
  std::vector<char> cur;      // current prefix
  std::vector<Vertex> placed;
  std::set<Vertex> used;

  void rec() {
    size_t i = placed.size();
    if (i == (size_t)n) {
      std::string s(cur.begin(), cur.end());
      if (best.empty() || s < best) best = s;
      return;
    }
    // Candidates: unplaced vertices adjacent to the prefix; all unplaced
    // when none touches (start / new component).
    std::vector<Vertex> cands;
    for (Vertex v : verts) {
      if (used.count(v)) continue;
      for (Vertex w : placed) {
        if (g.has_edge(v, w)) {
          cands.push_back(v);
          break;
        }
      }
    }
    if (cands.empty()) {
      for (Vertex v : verts)
        if (!used.count(v)) cands.push_back(v);
    }
    // Keep only candidates whose row is minimal.
    std::string min_row;
    std::vector<std::pair<std::string, Vertex>> rows;
    for (Vertex v : cands) {
      std::string row;
      row.reserve(i);
      for (Vertex w : placed) row.push_back(g.has_edge(v, w) ? '1' : '0');
      if (min_row.empty() || row < min_row) min_row = row;
      rows.push_back({std::move(row), v});
    }
    if (i == 0) min_row = "";  // all starts tie on the empty row
    // Prune against the best complete string found so far.
    if (!best.empty()) {
      std::string prefix(cur.begin(), cur.end());
      prefix += min_row;
      if (prefix > best.substr(0, prefix.size())) return;
    }
    for (const auto& [row, v] : rows) {
      if (row != min_row) continue;
      size_t mark = cur.size();
      cur.insert(cur.end(), row.begin(), row.end());
      placed.push_back(v);
      used.insert(v);
      rec();
      used.erase(v);
      placed.pop_back();
      cur.resize(mark);
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  CanonSearch s{g, g.vertices(), g.num_vertices(), "", {}, {}, {}};
  if (s.n == 0) return "n=0;";
  s.rec();
  return "n=" + std::to_string(s.n) + ";" + s.best;
}

namespace {

// Block-cut tree walker for the cactus code. Node ids: 0..B-1 are blocks,
// B.. are cut vertices.
class CactusCoder {
 public:
  explicit CactusCoder(const Graph& g) : g_(g), blocks_(g.blocks()) {
    std::map<Vertex, int> membership;
    for (const auto& b : blocks_)
      for (Vertex v : b.vertices) ++membership[v];
    int next = static_cast<int>(blocks_.size());
    for (const auto& [v, cnt] : membership)
      if (cnt >= 2) cut_node_[v] = next++;
    adj_.resize(next);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (Vertex v : blocks_[i].vertices)
        if (auto it = cut_node_.find(v); it != cut_node_.end()) {
          adj_[i].push_back(it->second);
          adj_[it->second].push_back(static_cast<int>(i));
        }
  }

  std::string code() {
    if (blocks_.empty()) return "v1";
    std::string best;
    for (int c : tree_center()) {
      std::string s = root_code(c);
      if (best.empty() || s < best) best = std::move(s);
    }
    return best;
  }

 private:
  // Vertices of a cycle block in walk order starting at `from`.
  std::vector<Vertex> cycle_walk(const Graph::Block& b, Vertex from) const {
    std::map<Vertex, std::vector<Vertex>> nb;
    for (const Edge& e : b.edges) {
      nb[e.first].push_back(e.second);
      nb[e.second].push_back(e.first);
    }
    std::vector<Vertex> walk = {from};
    Vertex prev = -1, cur = from;
    while (walk.size() < b.vertices.size()) {
      const auto& cands = nb.at(cur);
      Vertex nxt = (cands[0] != prev) ? cands[0] : cands[1];
      walk.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return walk;
  }

  // Code of vertex v seen from inside block `via`: its other blocks, sorted.
  std::string vertex_code(Vertex v, int via) {
    auto it = cut_node_.find(v);
    if (it == cut_node_.end()) return "()";
    std::vector<std::string> parts;
    for (int b : adj_[it->second])
      if (b != via) parts.push_back(block_code(b, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    return out + ")";
  }

  // Code of block b entered at cut vertex `entry`.
  std::string block_code(int b, Vertex entry) {
    const Graph::Block& blk = blocks_[b];
    if (blk.is_bridge()) {
      const Edge& e = blk.edges[0];
      const Vertex o = (e.first == entry) ? e.second : e.first;
      return "b<" + vertex_code(o, b) + ">";
    }
    const auto walk = cycle_walk(blk, entry);
    const std::size_t len = walk.size();
    std::vector<std::string> codes(len);
    for (std::size_t i = 1; i < len; ++i) codes[i] = vertex_code(walk[i], b);
    std::string fwd, rev;
    for (std::size_t i = 1; i < len; ++i) fwd += codes[i] + ",";
    for (std::size_t i = len - 1; i >= 1; --i) rev += codes[i] + ",";
    return "c" + std::to_string(len) + "<" + std::min(fwd, rev) + ">";
  }

  // Root encodings: a cut vertex roots like an interior vertex with no
  // parent; a root cycle takes the minimum over all rotations/reflections.
  std::string root_code(int node) {
    if (node >= static_cast<int>(blocks_.size())) {
      Vertex v = -1;
      for (const auto& [u, id] : cut_node_)
        if (id == node) v = u;
      std::vector<std::string> parts;
      for (int b : adj_[node]) parts.push_back(block_code(b, v));
      std::sort(parts.begin(), parts.end());
      std::string out = "R(";
      for (const auto& p : parts) out += p;
      return out + ")";
    }
    const Graph::Block& blk = blocks_[node];
    if (blk.is_bridge()) {
      const Edge& e = blk.edges[0];
      std::vector<std::string> parts = {vertex_code(e.first, node),
                                        vertex_code(e.second, node)};
      std::sort(parts.begin(), parts.end());
      return "Rb<" + parts[0] + parts[1] + ">";
    }
    const auto walk = cycle_walk(blk, blk.vertices.front());
    const std::size_t len = walk.size();
    std::vector<std::string> codes(len);
    for (std::size_t i = 0; i < len; ++i) codes[i] = vertex_code(walk[i], node);
    std::string best;
    for (std::size_t start = 0; start < len; ++start) {
      for (int dir : {1, -1}) {
        std::string s;
        for (std::size_t k = 0; k < len; ++k) {
          const std::size_t i = (start + len + dir * k) % len;
          s += codes[i] + ",";
        }
        if (best.empty() || s < best) best = std::move(s);
      }
    }
    return "Rc" + std::to_string(len) + "<" + best + ">";
  }

  // Center (one or two nodes) of the block-cut tree by leaf stripping.
  std::vector<int> tree_center() const {
    const int n = static_cast<int>(adj_.size());
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(adj_[i].size());
    std::vector<int> layer;
    for (int i = 0; i < n; ++i)
      if (deg[i] <= 1) layer.push_back(i);
    int remaining = n;
    while (remaining > 2) {
      std::vector<int> nxt;
      remaining -= static_cast<int>(layer.size());
      for (int v : layer)
        for (int w : adj_[v])
          if (--deg[w] == 1) nxt.push_back(w);
      layer = std::move(nxt);
    }
    return layer;
  }

  const Graph& g_;
  std::vector<Graph::Block> blocks_;
  std::map<Vertex, int> cut_node_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

std::string cactus_code(const Graph& g) {
  if (g.num_vertices() == 0) return "v0";
  if (!g.is_cactus()) throw Error("cactus_code: input must be a connected cactus");
  return CactusCoder(g).code();
}

}  // namespace liec
