#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liec/graph.hpp"

namespace liec {

// Named reference graphs. Rooted ones (berries, end-grapes, openings) carry
// the distinguished root vertex; `root` is -1 otherwise.
struct Template {
  std::string name;
  Graph g;
  Vertex root = -1;
};

namespace tmpl {

// The bow-tie: two vertices joined by an edge, each lying on two triangles.
// The unique known colorable graph needing four colors.
Graph bowtie_B();

// Grape with berries {B1, B1, B7} at one root: has a 3-liec, but none in
// which every berry is colored by one of the three mechanical flavors.
Graph grape_Bprime();
Vertex grape_Bprime_root();

// Berries, rooted at u.
Graph berry_B1();                    // triangle
Graph berry_B2(int at_v, int at_w);  // triangle + even paths (not both 0)
Graph berry_B7();                    // u-v plus two length-2 paths at v
Vertex berry_root();                 // all berry builders root at vertex 0

// Double spiders: adjacent centers with two pendant length-2 legs each
// (D33, 9 edges) or three each (D44, 13 edges) — the smallest trees with
// chromatic index 3.
Graph double_spider_D33();
Graph double_spider_D44();

// Irreducible end-grape shapes (smallest forms), rooted at u = vertex 0:
//   A1 {B1,B1} one exit, A2 {B1,B1} two exits, A3 {B1,P2k} (any even path;
//   the template holds k=1), A4 {B1,B7} — A3/A4 with either exit count —
//   A5 {B1,B1,B7} and A6 {B1,B7,B7}, both with two exits only.
// The graphs here are the grape parts only; exit edges live in descriptors.
Graph endgrape_A(int i);
// Opened forms: every triangle u-v-w loses its u-w edge (higher-id w).
Graph endgrape_A_open(int i);

// All fixed templates under their registry names.
const std::vector<Template>& registry();

std::optional<Template> lookup(const std::string& name);

}  // namespace tmpl

}  // namespace liec
