#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liec/coloring.hpp"
#include "test_util.hpp"

using namespace liec;
using namespace liec::testutil;

namespace {
EdgeColoring colored(std::initializer_list<std::pair<Edge, Color>> xs) {
  EdgeColoring col;
  for (const auto& [e, c] : xs) col.set(e, c);
  return col;
}
}  // namespace

TEST_CASE("color_degree basics") {
  Graph star = star_graph(3);
  EdgeColoring col = colored({{{0, 1}, 0}, {{0, 2}, 0}, {{0, 3}, 0}});
  CHECK(color_degree(star, col, 0, 0) == 3);
  CHECK(color_degree(star, col, 1, 1) == 0);
  CHECK(color_degree(star, col, 1, 0) == 1);
  CHECK_THROWS_AS(color_degree(star, col, 99, 0), Error);

  ChromaticProfile prof(star, col);
  CHECK(prof.color_degree(0, 0) == 3);
  CHECK(prof.monochromatic(0));
  CHECK(prof.chromatic_count(0) == 1);
}

TEST_CASE("profile degree sums match vertex degrees") {
  Graph g = Graph::from_edges({{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  EdgeColoring col =
      colored({{{0, 1}, 0}, {{1, 2}, 1}, {{0, 2}, 2}, {{0, 3}, 1}});
  ChromaticProfile prof(g, col);
  for (Vertex v : g.vertices()) {
    int sum = 0;
    for (Color c = 0; c < 3; ++c) sum += prof.color_degree(v, c);
    CHECK(sum == g.degree(v));
  }
  CHECK(prof.chromatic_count(0) == 3);
}

TEST_CASE("a_sequence is non-increasing") {
  Graph star = star_graph(3);
  EdgeColoring col = colored({{{0, 1}, 0}, {{0, 2}, 0}, {{0, 3}, 0}});
  CHECK(a_sequence(star, col, 0, 1).empty());

  // Root u=0 with three a-edges; one neighbor carries two more a-edges,
  // the other two carry one more each.
  Graph t = Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5},
                               {2, 6}, {3, 7}});
  EdgeColoring ac;
  for (const Edge& e : t.edges()) ac.set(e, 0);
  CHECK(a_sequence(t, ac, 0, 0) == std::vector<int>{3, 2, 2});
}

TEST_CASE("is_liec accepts and rejects with first violating edge") {
  Graph p2 = path_graph(2);
  auto r = is_liec(p2, colored({{{0, 1}, 0}, {{1, 2}, 0}}));
  CHECK(r.ok);

  Graph k3 = complete_graph(3);
  EdgeColoring mono = colored({{{0, 1}, 0}, {{0, 2}, 0}, {{1, 2}, 0}});
  auto bad = is_liec(k3, mono);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violating.has_value());
  CHECK(*bad.violating == Edge{0, 1});

  Graph c4 = cycle_graph(4);
  auto good = is_liec(
      c4, colored({{{0, 1}, 0}, {{1, 2}, 0}, {{2, 3}, 1}, {{0, 3}, 1}}));
  CHECK(good.ok);

  EdgeColoring partial = colored({{{0, 1}, 0}});
  CHECK_THROWS_AS(is_liec(c4, partial), Error);
}

TEST_CASE("is_aliec classifies shrub colorings") {
  Graph p1 = path_graph(1);
  CHECK(is_aliec(p1, {0, 1}, colored({{{0, 1}, 0}})) ==
        AliecStatus::ProperAliec);

  Graph p2 = path_graph(2);
  CHECK(is_aliec(p2, {0, 1}, colored({{{0, 1}, 0}, {{1, 2}, 0}})) ==
        AliecStatus::Liec);

  Graph p3 = path_graph(3);
  EdgeColoring aaa = colored({{{0, 1}, 0}, {{1, 2}, 0}, {{2, 3}, 0}});
  CHECK(is_aliec(p3, {0, 1}, aaa) == AliecStatus::Invalid);

  // abb from the root: root edge isolated in a, the rest a liec.
  EdgeColoring abb = colored({{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 1}});
  CHECK(is_aliec(p3, {0, 1}, abb) == AliecStatus::ProperAliec);

  // Root edge must touch a leaf.
  Graph spider = star_graph(3);
  Graph sp = spider.with_edge(1, 4).with_edge(2, 5);
  CHECK_THROWS_AS(
      is_aliec(sp, {0, 1},
               colored({{{0, 1}, 0}, {{0, 2}, 0}, {{0, 3}, 0},
                        {{1, 4}, 0}, {{2, 5}, 0}})),
      Error);

  CHECK_THROWS_AS(is_aliec(complete_graph(3), {0, 1},
                           colored({{{0, 1}, 0}, {{0, 2}, 0}, {{1, 2}, 0}})),
                  Error);
}

TEST_CASE("sum_colorings unions disjoint parts") {
  EdgeColoring a = colored({{{0, 1}, 0}});
  EdgeColoring b = colored({{{1, 2}, 1}});
  EdgeColoring s = sum_colorings({a, b});
  CHECK(s.size() == 2);
  CHECK(s.at(1, 2) == 1);

  CHECK(sum_colorings({a}) == a);

  EdgeColoring clash = colored({{{0, 1}, 1}});
  try {
    sum_colorings({a, clash});
    FAIL("expected clash error");
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("0-1") != std::string::npos);
  }
}

TEST_CASE("permute_colors relabels and preserves liec") {
  Graph p2 = path_graph(2);
  EdgeColoring col = colored({{{0, 1}, 0}, {{1, 2}, 0}});
  CHECK(permute_colors(col, {}) == col);

  EdgeColoring swapped = permute_colors(col, {{0, 1}, {1, 0}});
  CHECK(swapped.at(0, 1) == 1);
  CHECK(is_liec(p2, swapped).ok);

  // Partial maps default to identity: a->c on a 2-liec gives colors {c,b}.
  Graph c4 = cycle_graph(4);
  EdgeColoring two =
      colored({{{0, 1}, 0}, {{1, 2}, 0}, {{2, 3}, 1}, {{0, 3}, 1}});
  EdgeColoring cb = permute_colors(two, {{0, 2}});
  CHECK(cb.used_colors() == std::set<Color>{1, 2});
  CHECK(is_liec(c4, cb).ok);

  CHECK_THROWS_AS(permute_colors(two, {{0, 1}}), Error);

  CHECK(apply_roles(two, {2, 1, 0}).used_colors() ==
        std::set<Color>{1, 2});
}

TEST_CASE("extend_through_trim: identity and k guard") {
  EdgeColoring col = colored({{{0, 1}, 0}});
  TrimTrace empty;
  CHECK(extend_through_trim(col, empty, 3) == col);
  CHECK_THROWS_AS(extend_through_trim(col, empty, 2), Error);
}

TEST_CASE("extend_through_trim: pendant reinsertion") {
  // Triangle 0-1-2 with pendant path 2-3-4-5-6-7 (length 5).
  Graph g = Graph::from_edges(
      {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  auto [t, trace] = trim(g);
  REQUIRE(trace.steps.size() == 2);
  // Hand 3-liec of the trimmed graph (triangle + pendant edge at 2).
  EdgeColoring col =
      colored({{{0, 1}, 0}, {{1, 2}, 0}, {{0, 2}, 1}, {{2, 3}, 1}});
  REQUIRE(is_liec(t, col).ok);
  EdgeColoring full = extend_through_trim(col, trace, 3);
  CHECK(full.total_on(g));
  CHECK(is_liec(g, full).ok);
  CHECK(full.color_span() <= 3);
}

TEST_CASE("extend_through_trim: ear splice") {
  // C9 with leaves at 0 and 2; the length-7 arc trims to length 3.
  std::vector<Edge> es;
  for (int i = 0; i < 9; ++i) es.push_back({i, (i + 1) % 9});
  es.push_back({0, 9});
  es.push_back({2, 10});
  Graph g = Graph::from_edges(es);
  auto [t, trace] = trim(g);
  REQUIRE(trace.steps.size() == 2);
  EdgeColoring col = colored({{{0, 1}, 1},
                              {{1, 2}, 0},
                              {{2, 3}, 0},
                              {{2, 10}, 0},
                              {{3, 4}, 1},
                              {{0, 4}, 1},
                              {{0, 9}, 1}});
  REQUIRE(is_liec(t, col).ok);
  EdgeColoring full = extend_through_trim(col, trace, 3);
  CHECK(full.total_on(g));
  CHECK(is_liec(g, full).ok);
}

TEST_CASE("extend_through_trim: bare cycle splice") {
  Graph c8 = cycle_graph(8);
  auto [t, trace] = trim(c8);
  REQUIRE(t.num_edges() == 4);
  // C4 has the 2-liec aabb read around the walk.
  std::vector<std::vector<Vertex>> cyc = t.cycle_list();
  REQUIRE(cyc.size() == 1);
  const auto& w = cyc[0];
  EdgeColoring col;
  col.set(w[0], w[1], 0);
  col.set(w[1], w[2], 0);
  col.set(w[2], w[3], 1);
  col.set(w[3], w[0], 1);
  REQUIRE(is_liec(t, col).ok);
  EdgeColoring full = extend_through_trim(col, trace, 3);
  CHECK(full.total_on(c8));
  CHECK(is_liec(c8, full).ok);
}
