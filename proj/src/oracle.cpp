#include "liec/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>

namespace liec {

namespace {

struct ExhaustedSignal {};

class Solver {
 public:
  Solver(const Graph& g, int k, const SearchBudget& budget,
         bool dfs_edge_order)
      : g_(g), k_(k), budget_(budget) {
    if (k < 1 || k > kMaxColors) {
      throw Error("oracle: color count " + std::to_string(k) +
                  " out of range");
    }
    for (Vertex v : g.vertices()) {
      idx_[v] = static_cast<int>(vid_.size());
      vid_.push_back(v);
    }
    n_ = static_cast<int>(vid_.size());
    deg_.assign(n_, 0);
    colored_cnt_.assign(n_, 0);
    cdeg_.assign(n_, {});
    inc_.assign(n_, {});
    std::vector<Edge> order =
        dfs_edge_order ? dfs_edges() : g.edges();
    for (const Edge& e : order) {
      int u = idx_[e.first], v = idx_[e.second];
      int ei = static_cast<int>(es_.size());
      es_.push_back({u, v});
      inc_[u].push_back({ei, v});
      inc_[v].push_back({ei, u});
      deg_[u]++;
      deg_[v]++;
    }
    m_ = static_cast<int>(es_.size());
    ecol_.assign(m_, -1);
    start_ = std::chrono::steady_clock::now();
  }

  // Root edge of an aliec search: it alone may be locally regular, and then
  // only with color degree 1 on both sides.
  void set_aliec_root_edge(Edge e) {
    int u = idx_.at(e.first), v = idx_.at(e.second);
    for (int i = 0; i < m_; ++i) {
      if ((es_[i].first == u && es_[i].second == v) ||
          (es_[i].first == v && es_[i].second == u)) {
        root_edge_ = i;
        return;
      }
    }
    throw Error("oracle: root edge not in graph");
  }

  void set_symmetry_breaking(bool on) { symmetry_ = on; }

  // Returns false if the visitor stopped the search early.
  bool run(const std::function<bool(const EdgeColoring&)>& emit) {
    emit_ = emit;
    stopped_ = false;
    if (m_ == 0) {
      stopped_ = !emit_(EdgeColoring{});
      return !stopped_;
    }
    dfs(0, 0);
    return !stopped_;
  }

  long long nodes() const { return nodes_; }

 private:
  std::vector<Edge> dfs_edges() const {
    std::vector<Edge> order;
    std::map<Vertex, bool> seen;
    std::map<Edge, bool> rec;
    for (Vertex s : g_.vertices()) {
      if (seen[s]) continue;
      std::vector<Vertex> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g_.neighbors(v)) {
          Edge e = mk_edge(v, w);
          if (!rec[e]) {
            rec[e] = true;
            order.push_back(e);
          }
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
    }
    return order;
  }

  void tick() {
    ++nodes_;
    if (budget_.node_limit > 0 && nodes_ > budget_.node_limit) {
      throw ExhaustedSignal{};
    }
    if (budget_.time_limit_seconds > 0 && (nodes_ & 1023) == 0) {
      double sec = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
      if (sec > budget_.time_limit_seconds) throw ExhaustedSignal{};
    }
  }

  bool saturated(int v) const { return colored_cnt_[v] == deg_[v]; }

  // True iff some fully-saturated same-color pair became locally regular
  // after the latest assignment touching u or v (illegal, up to the aliec
  // root-edge exception).
  bool violates(int ei) {
    for (int z : {es_[ei].first, es_[ei].second}) {
      if (!saturated(z)) continue;
      for (const auto& [je, w] : inc_[z]) {
        int c = ecol_[je];
        if (c < 0 || !saturated(w)) continue;
        if (cdeg_[z][c] != cdeg_[w][c]) continue;
        if (je == root_edge_ && cdeg_[z][c] == 1 && cdeg_[w][c] == 1) {
          continue;  // isolated regular root edge is allowed
        }
        return true;
      }
    }
    return false;
  }

  // Full check used when pruning is disabled (and as the emit-time verify).
  bool full_ok() const {
    for (int ei = 0; ei < m_; ++ei) {
      int c = ecol_[ei];
      int u = es_[ei].first, v = es_[ei].second;
      if (cdeg_[u][c] != cdeg_[v][c]) continue;
      if (ei == root_edge_ && cdeg_[u][c] == 1 && cdeg_[v][c] == 1) continue;
      return false;
    }
    return true;
  }

  void emit_current() {
    if (!full_ok()) {
      throw Error("oracle: internal error, unsound pruning");
    }
    EdgeColoring col;
    for (int ei = 0; ei < m_; ++ei) {
      col.set(vid_[es_[ei].first], vid_[es_[ei].second], ecol_[ei]);
    }
    if (!emit_(col)) stopped_ = true;
  }

  void dfs(int i, int used) {
    if (stopped_) return;
    if (i == m_) {
      if (budget_.disable_pruning && !full_ok()) return;
      emit_current();
      return;
    }
    int cmax = symmetry_ ? std::min(used, k_ - 1) : k_ - 1;
    auto [u, v] = es_[i];
    for (int c = 0; c <= cmax; ++c) {
      tick();
      ecol_[i] = c;
      cdeg_[u][c]++;
      cdeg_[v][c]++;
      colored_cnt_[u]++;
      colored_cnt_[v]++;
      if (budget_.disable_pruning || !violates(i)) {
        dfs(i + 1, std::max(used, c + 1));
      }
      colored_cnt_[u]--;
      colored_cnt_[v]--;
      cdeg_[u][c]--;
      cdeg_[v][c]--;
      ecol_[i] = -1;
      if (stopped_) return;
    }
  }

  const Graph& g_;
  int k_;
  SearchBudget budget_;
  int n_ = 0, m_ = 0;
  std::map<Vertex, int> idx_;
  std::vector<Vertex> vid_;
  std::vector<std::pair<int, int>> es_;
  std::vector<std::vector<std::pair<int, int>>> inc_;
  std::vector<int> deg_, colored_cnt_, ecol_;
  std::vector<std::array<int, kMaxColors>> cdeg_;
  int root_edge_ = -1;
  bool symmetry_ = false;
  bool stopped_ = false;
  std::function<bool(const EdgeColoring&)> emit_;
  long long nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SearchResult find_liec(const Graph& g, int k, const SearchBudget& budget) {
  SearchResult out;
  Solver solver(g, k, budget, /*dfs_edge_order=*/true);
  solver.set_symmetry_breaking(true);
  try {
    solver.run([&](const EdgeColoring& col) {
      out.coloring = col;
      return false;  // stop at the first solution
    });
  } catch (const ExhaustedSignal&) {
    out.status = SearchStatus::Exhausted;
    out.nodes = solver.nodes();
    return out;
  }
  out.nodes = solver.nodes();
  if (out.coloring) {
    if (!is_liec(g, *out.coloring).ok) {
      throw Error("oracle: find_liec produced a non-liec");
    }
    out.status = SearchStatus::Found;
  } else {
    out.status = SearchStatus::NoneExists;
  }
  return out;
}

ChromaticIndexResult chromatic_index_irr(const Graph& g, int kmax,
                                         const SearchBudget& budget) {
  if (!g.connected()) {
    throw Error("chromatic_index_irr: graph is disconnected");
  }
  ChromaticIndexResult out;
  if (g.num_edges() == 0) {
    out.value = 0;
    out.witness = EdgeColoring{};
    return out;
  }
  for (int k = 1; k <= kmax; ++k) {
    SearchResult r = find_liec(g, k, budget);
    out.nodes += r.nodes;
    if (r.exhausted()) {
      out.exhausted = true;
      return out;
    }
    if (r.found()) {
      out.value = k;
      out.witness = r.coloring;
      return out;
    }
  }
  return out;
}

SearchStatus enumerate_liecs(
    const Graph& g, int k, const SearchBudget& budget,
    const std::function<bool(const EdgeColoring&)>& visit) {
  Solver solver(g, k, budget, /*dfs_edge_order=*/false);
  long long emitted = 0;
  try {
    solver.run([&](const EdgeColoring& col) {
      ++emitted;
      return visit(col);
    });
  } catch (const ExhaustedSignal&) {
    return SearchStatus::Exhausted;
  }
  return emitted > 0 ? SearchStatus::Found : SearchStatus::NoneExists;
}

std::vector<EdgeColoring> all_liecs(const Graph& g, int k,
                                    const SearchBudget& budget) {
  std::vector<EdgeColoring> out;
  SearchStatus st = enumerate_liecs(g, k, budget, [&](const EdgeColoring& c) {
    out.push_back(c);
    return true;
  });
  if (st == SearchStatus::Exhausted) {
    throw Error("all_liecs: search budget exhausted");
  }
  return out;
}

SearchResult find_aliec(const Graph& shrub, Vertex root, int k,
                        const SearchBudget& budget) {
  if (!shrub.connected() ||
      shrub.num_edges() != shrub.num_vertices() - 1) {
    throw Error("find_aliec: input is not a tree");
  }
  if (!shrub.has_vertex(root) || shrub.degree(root) != 1) {
    throw Error("find_aliec: root is not a leaf");
  }
  Edge root_edge = mk_edge(root, shrub.neighbors(root)[0]);
  SearchResult out;
  Solver solver(shrub, k, budget, /*dfs_edge_order=*/true);
  solver.set_symmetry_breaking(true);
  solver.set_aliec_root_edge(root_edge);
  try {
    solver.run([&](const EdgeColoring& col) {
      out.coloring = col;
      return false;
    });
  } catch (const ExhaustedSignal&) {
    out.status = SearchStatus::Exhausted;
    out.nodes = solver.nodes();
    return out;
  }
  out.nodes = solver.nodes();
  if (out.coloring) {
    AliecStatus st = is_aliec(shrub, root_edge, *out.coloring);
    if (st == AliecStatus::Invalid) {
      throw Error("oracle: find_aliec produced an invalid aliec");
    }
    out.status = SearchStatus::Found;
  } else {
    out.status = SearchStatus::NoneExists;
  }
  return out;
}

}  // namespace liec
