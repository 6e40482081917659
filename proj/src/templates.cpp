#include "liec/templates.hpp"

#include <utility>

namespace liec {
namespace tmpl {

namespace {

// Appends a pendant path of `len` edges starting at `from`, using fresh
// vertex ids from `next`. Returns the far endpoint.
Vertex add_path(std::vector<Edge>& es, Vertex from, int len, Vertex& next) {
  Vertex cur = from;
  for (int i = 0; i < len; ++i) {
    es.push_back(mk_edge(cur, next));
    cur = next++;
  }
  return cur;
}

void add_triangle(std::vector<Edge>& es, Vertex a, Vertex b, Vertex c) {
  es.push_back(mk_edge(a, b));
  es.push_back(mk_edge(b, c));
  es.push_back(mk_edge(a, c));
}

// u-v edge plus two length-2 paths at v; rooted at u.
void add_b7(std::vector<Edge>& es, Vertex u, Vertex& next) {
  Vertex v = next++;
  es.push_back(mk_edge(u, v));
  add_path(es, v, 2, next);
  add_path(es, v, 2, next);
}

}  // namespace

Graph bowtie_B() {
  std::vector<Edge> es;
  es.push_back(mk_edge(0, 1));
  add_triangle(es, 0, 2, 3);
  add_triangle(es, 0, 4, 5);
  add_triangle(es, 1, 6, 7);
  add_triangle(es, 1, 8, 9);
  return Graph::from_edges(es);
}

Graph grape_Bprime() {
  std::vector<Edge> es;
  add_triangle(es, 0, 1, 2);
  add_triangle(es, 0, 3, 4);
  Vertex next = 5;
  add_b7(es, 0, next);
  return Graph::from_edges(es);
}

Vertex grape_Bprime_root() { return 0; }

Graph berry_B1() {
  std::vector<Edge> es;
  add_triangle(es, 0, 1, 2);
  return Graph::from_edges(es);
}

Graph berry_B2(int at_v, int at_w) {
  if (at_v < 0 || at_w < 0 || at_v % 2 != 0 || at_w % 2 != 0)
    throw Error("berry_B2: path lengths must be even and non-negative");
  if (at_v == 0 && at_w == 0)
    throw Error("berry_B2: at least one path must be non-empty");
  std::vector<Edge> es;
  add_triangle(es, 0, 1, 2);
  Vertex next = 3;
  add_path(es, 1, at_v, next);
  add_path(es, 2, at_w, next);
  return Graph::from_edges(es);
}

Graph berry_B7() {
  std::vector<Edge> es;
  Vertex next = 1;
  add_b7(es, 0, next);
  return Graph::from_edges(es);
}

Vertex berry_root() { return 0; }

Graph double_spider_D33() {
  std::vector<Edge> es;
  es.push_back(mk_edge(0, 1));
  Vertex next = 2;
  add_path(es, 0, 2, next);
  add_path(es, 0, 2, next);
  add_path(es, 1, 2, next);
  add_path(es, 1, 2, next);
  return Graph::from_edges(es);
}

Graph double_spider_D44() {
  std::vector<Edge> es;
  es.push_back(mk_edge(0, 1));
  Vertex next = 2;
  for (int i = 0; i < 3; ++i) add_path(es, 0, 2, next);
  for (int i = 0; i < 3; ++i) add_path(es, 1, 2, next);
  return Graph::from_edges(es);
}

Graph endgrape_A(int i) {
  std::vector<Edge> es;
  Vertex next = 0;
  switch (i) {
    case 1:
    case 2:
      add_triangle(es, 0, 1, 2);
      add_triangle(es, 0, 3, 4);
      break;
    case 3:
      add_triangle(es, 0, 1, 2);
      next = 3;
      add_path(es, 0, 2, next);
      break;
    case 4:
      add_triangle(es, 0, 1, 2);
      next = 3;
      add_b7(es, 0, next);
      break;
    case 5:
      add_triangle(es, 0, 1, 2);
      add_triangle(es, 0, 3, 4);
      next = 5;
      add_b7(es, 0, next);
      break;
    case 6:
      add_triangle(es, 0, 1, 2);
      next = 3;
      add_b7(es, 0, next);
      add_b7(es, 0, next);
      break;
    default:
      throw Error("endgrape_A: index must be in 1..6");
  }
  return Graph::from_edges(es);
}

Graph endgrape_A_open(int i) {
  Graph g = endgrape_A(i);
  // Open every triangle at the root: drop the root-to-higher-id edge.
  for (const Graph::Block& b : g.blocks()) {
    if (!b.is_cycle()) continue;
    Vertex hi = -1;
    for (Vertex v : b.vertices)
      if (v != 0 && v > hi) hi = v;
    g = g.without_edge(0, hi);
  }
  return g;
}

const std::vector<Template>& registry() {
  static const std::vector<Template> reg = [] {
    std::vector<Template> r;
    r.push_back({"B", bowtie_B(), -1});
    r.push_back({"Bprime", grape_Bprime(), grape_Bprime_root()});
    r.push_back({"B1", berry_B1(), berry_root()});
    r.push_back({"B2", berry_B2(0, 2), berry_root()});
    r.push_back({"B7", berry_B7(), berry_root()});
    for (int i = 1; i <= 6; ++i) {
      r.push_back({"A" + std::to_string(i), endgrape_A(i), 0});
      r.push_back({"A" + std::to_string(i) + "op", endgrape_A_open(i), 0});
    }
    r.push_back({"D33", double_spider_D33(), -1});
    r.push_back({"D44", double_spider_D44(), -1});
    return r;
  }();
  return reg;
}

std::optional<Template> lookup(const std::string& name) {
  for (const Template& t : registry())
    if (t.name == name) return t;
  return std::nullopt;
}

}  // namespace tmpl
}  // namespace liec
