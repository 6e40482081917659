#include "liec/gen.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "liec/iso.hpp"

namespace liec {

namespace {

// Uniform-ish integer in [lo, hi]. std::uniform_int_distribution is not
// bit-reproducible across standard libraries, so draw directly; the modulo
// bias is negligible for the tiny ranges used here.
int pick(std::mt19937_64& rng, int lo, int hi) {
  if (lo > hi) throw Error("pick: empty range");
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Appends a cycle of length len attached at `at`, using fresh ids from n.
void append_cycle(std::vector<Edge>& es, Vertex at, int len, int& n) {
  Vertex prev = at;
  for (int i = 0; i < len - 1; ++i) {
    es.push_back(mk_edge(prev, n));
    prev = n++;
  }
  es.push_back(mk_edge(prev, at));
}

}  // namespace

Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error("gen_random_tree: need at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back(mk_edge(pick(rng, 0, v - 1), v));
  if (n == 1) return Graph::from_parts({0}, {});
  return Graph::from_edges(es);
}

Graph gen_random_cactus(int n, int cycles, std::uint64_t seed) {
  if (n < 1) throw Error("gen_random_cactus: need at least one vertex");
  if (cycles < 0) throw Error("gen_random_cactus: negative cycle count");
  if (cycles > 0 && n < 1 + 2 * cycles)
    throw Error("gen_random_cactus: " + std::to_string(cycles) +
                " cycles need at least " + std::to_string(1 + 2 * cycles) +
                " vertices");
  if (cycles == 0) return gen_random_tree(n, seed);

  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  int used = 0;
  for (int r = cycles; r >= 1; --r) {
    // Leave room for the remaining r-1 cycles (two fresh vertices each).
    const int avail = n - used;
    int len;
    Vertex at;
    if (used == 0) {
      len = pick(rng, 3, avail - 2 * (r - 1));
      at = 0;
      used = 1;
    } else {
      len = pick(rng, 3, avail - 2 * (r - 1) + 1);
      at = pick(rng, 0, used - 1);
    }
    append_cycle(es, at, len, used);
  }
  while (used < n) {
    es.push_back(mk_edge(pick(rng, 0, used - 1), used));
    ++used;
  }
  return Graph::from_edges(es);
}

Graph gen_T(int steps, std::uint64_t seed, TTrace* trace) {
  if (steps < 0) throw Error("gen_T: negative step count");
  std::mt19937_64 rng(seed);

  TTrace tr;
  tr.base = {0, 1, 2};
  std::vector<Edge> es = {mk_edge(0, 1), mk_edge(1, 2), mk_edge(0, 2)};
  int next = 3;
  // Triangle vertices still at degree 2, i.e. legal growth points.
  std::vector<Vertex> cands = {0, 1, 2};

  for (int s = 0; s < steps; ++s) {
    const int ci = pick(rng, 0, static_cast<int>(cands.size()) - 1);
    const Vertex v = cands[ci];
    cands.erase(cands.begin() + ci);
    // Gluing an even path consumes a growth point without creating any; a
    // triangle step nets one. Never strand the remaining steps.
    const bool need_triangle = cands.empty() && s + 1 < steps;
    const bool triangle_step = need_triangle || pick(rng, 0, 1) == 1;

    TStep step;
    step.attach = v;
    step.path = {v};
    if (triangle_step) {
      step.kind = TStep::Kind::TriangleOddPath;
      const int len = 2 * pick(rng, 0, 2) + 1;  // 1, 3, or 5
      Vertex cur = v;
      for (int i = 0; i < len; ++i) {
        es.push_back(mk_edge(cur, next));
        cur = next++;
        step.path.push_back(cur);
      }
      const Vertex t1 = next++, t2 = next++;
      es.push_back(mk_edge(cur, t1));
      es.push_back(mk_edge(t1, t2));
      es.push_back(mk_edge(cur, t2));
      step.triangle = {cur, t1, t2};
      cands.push_back(t1);
      cands.push_back(t2);
    } else {
      step.kind = TStep::Kind::EvenPath;
      const int len = 2 * pick(rng, 1, 3);  // 2, 4, or 6
      Vertex cur = v;
      for (int i = 0; i < len; ++i) {
        es.push_back(mk_edge(cur, next));
        cur = next++;
        step.path.push_back(cur);
      }
    }
    tr.steps.push_back(std::move(step));
  }

  Graph g = Graph::from_edges(es);
  if (trace) *trace = std::move(tr);
  return g;
}

std::vector<Graph> enumerate_connected_graphs(int max_vertices) {
  if (max_vertices < 1)
    throw Error("enumerate_connected_graphs: need at least one vertex");
  std::vector<Graph> out;
  std::vector<Graph> level = {Graph::from_parts({0}, {})};
  out.push_back(level[0]);
  for (int n = 2; n <= max_vertices; ++n) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      // Every connected graph has a non-cut vertex, so extending each
      // (n-1)-vertex class by one vertex joined to every non-empty
      // neighborhood subset reaches every n-vertex class.
      const Vertex nv = n - 1;
      for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<Edge> es = g.edges();
        for (int b = 0; b < n - 1; ++b)
          if (mask & (1u << b)) es.push_back(mk_edge(b, nv));
        Graph h = Graph::from_edges(es);
        next.emplace(canonical_form(h), std::move(h));
      }
    }
    level.clear();
    for (auto& [key, g] : next) {
      out.push_back(g);
      level.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> enumerate_trees(int max_vertices) {
  if (max_vertices < 1) throw Error("enumerate_trees: need at least one vertex");
  std::vector<Graph> out;
  std::vector<Graph> level = {Graph::from_parts({0}, {})};
  out.push_back(level[0]);
  for (int n = 2; n <= max_vertices; ++n) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      for (int v = 0; v < n - 1; ++v) {
        std::vector<Edge> es = g.edges();
        es.push_back(mk_edge(v, n - 1));
        Graph h = Graph::from_edges(es);
        next.emplace(cactus_code(h), std::move(h));
      }
    }
    level.clear();
    for (auto& [key, g] : next) {
      out.push_back(g);
      level.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> enumerate_cacti(int max_edges) {
  if (max_edges < 1) throw Error("enumerate_cacti: need at least one edge");
  if (max_edges > 14)
    throw Error("enumerate_cacti: supported up to 14 edges");

  // levels[e] holds one representative per class with e edges. Seeds are the
  // single edge and the bare cycles; growth adds a pendant edge or attaches
  // a fresh cycle at an existing vertex. Any larger cactus loses a pendant
  // edge or a leaf-block cycle, so this reaches every class.
  std::vector<std::map<std::string, Graph>> levels(max_edges + 1);
  auto insert = [&](Graph g) {
    const int e = static_cast<int>(g.num_edges());
    levels[e].emplace(cactus_code(g), std::move(g));
  };
  insert(Graph::from_edges({mk_edge(0, 1)}));
  for (int len = 3; len <= max_edges; ++len) {
    std::vector<Edge> es;
    int n = 1;
    append_cycle(es, 0, len, n);
    insert(Graph::from_edges(es));
  }

  for (int e = 1; e <= max_edges; ++e) {
    for (const auto& [key, g] : levels[e]) {
      const int n = static_cast<int>(g.num_vertices());
      for (Vertex v = 0; v < n; ++v) {
        if (e + 1 <= max_edges) {
          std::vector<Edge> es = g.edges();
          es.push_back(mk_edge(v, n));
          insert(Graph::from_edges(es));
        }
        for (int len = 3; e + len <= max_edges; ++len) {
          std::vector<Edge> es = g.edges();
          int nn = n;
          append_cycle(es, v, len, nn);
          insert(Graph::from_edges(es));
        }
      }
    }
  }

  std::vector<Graph> out;
  for (int e = 1; e <= max_edges; ++e)
    for (const auto& [key, g] : levels[e]) out.push_back(g);
  return out;
}

}  // namespace liec
