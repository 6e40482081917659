#include "liec/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace liec {

namespace {
std::string edge_str(const Edge& e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}
}  // namespace

void EdgeColoring::set(Edge e, Color c) {
  if (e.first == e.second) throw Error("coloring: loop edge " + edge_str(e));
  if (c < 0 || c >= kMaxColors) {
    throw Error("coloring: color " + std::to_string(c) + " out of range");
  }
  assign_[mk_edge(e.first, e.second)] = c;
}

Color EdgeColoring::at(Edge e) const {
  auto it = assign_.find(mk_edge(e.first, e.second));
  if (it == assign_.end()) {
    throw Error("coloring: edge " + edge_str(e) + " not colored");
  }
  return it->second;
}

std::set<Color> EdgeColoring::used_colors() const {
  std::set<Color> out;
  for (const auto& [e, c] : assign_) out.insert(c);
  return out;
}

int EdgeColoring::color_span() const {
  int m = 0;
  for (const auto& [e, c] : assign_) m = std::max(m, c + 1);
  return m;
}

bool EdgeColoring::total_on(const Graph& g) const {
  if (size() != g.num_edges()) return false;
  for (const Edge& e : g.edges())
    if (!has(e)) return false;
  return true;
}

std::string to_string(const EdgeColoring& col) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [e, c] : col.assignment()) {
    if (!first) os << ", ";
    first = false;
    os << edge_str(e) << ":" << color_name(c);
  }
  os << "}";
  return os.str();
}

ChromaticProfile::ChromaticProfile(const Graph& g, const EdgeColoring& col) {
  if (!col.total_on(g)) {
    throw Error("chromatic profile requires a total coloring");
  }
  for (Vertex v : g.vertices()) {
    deg_[v];
    inc_[v];
  }
  for (const Edge& e : g.edges()) {
    Color c = col.at(e);
    deg_[e.first][c]++;
    deg_[e.second][c]++;
    inc_[e.first].insert(c);
    inc_[e.second].insert(c);
  }
}

int ChromaticProfile::color_degree(Vertex v, Color c) const {
  auto it = deg_.find(v);
  if (it == deg_.end()) throw Error("profile: vertex not in graph");
  auto jt = it->second.find(c);
  return jt == it->second.end() ? 0 : jt->second;
}

const std::set<Color>& ChromaticProfile::incident_colors(Vertex v) const {
  auto it = inc_.find(v);
  if (it == inc_.end()) throw Error("profile: vertex not in graph");
  return it->second;
}

int ChromaticProfile::chromatic_count(Vertex v) const {
  return static_cast<int>(incident_colors(v).size());
}

int color_degree(const Graph& g, const EdgeColoring& col, Vertex v, Color c) {
  int d = 0;
  for (Vertex w : g.neighbors(v)) {
    if (col.at(v, w) == c) ++d;
  }
  return d;
}

std::vector<int> a_sequence(const Graph& g, const EdgeColoring& col, Vertex v,
                            Color c) {
  std::vector<int> out;
  for (Vertex w : g.neighbors(v)) {
    if (col.at(v, w) == c) out.push_back(color_degree(g, col, w, c));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

LiecResult is_liec(const Graph& g, const EdgeColoring& col) {
  if (!col.total_on(g)) {
    throw Error("is_liec requires a coloring total on the graph");
  }
  ChromaticProfile prof(g, col);
  for (const Edge& e : g.edges()) {
    Color c = col.at(e);
    if (prof.color_degree(e.first, c) == prof.color_degree(e.second, c)) {
      return {false, e};
    }
  }
  return {true, std::nullopt};
}

AliecStatus is_aliec(const Graph& shrub_g, Edge root_edge,
                     const EdgeColoring& col) {
  if (!shrub_g.connected() ||
      shrub_g.num_edges() != shrub_g.num_vertices() - 1) {
    throw Error("is_aliec: shrub must be a tree");
  }
  Edge re = mk_edge(root_edge.first, root_edge.second);
  if (!shrub_g.has_edge(re.first, re.second)) {
    throw Error("is_aliec: root edge not in shrub");
  }
  Vertex root;
  if (shrub_g.degree(re.first) == 1) {
    root = re.first;
  } else if (shrub_g.degree(re.second) == 1) {
    root = re.second;
  } else {
    throw Error("is_aliec: root vertex is not a leaf");
  }
  (void)root;
  if (!col.total_on(shrub_g)) {
    throw Error("is_aliec requires a total coloring");
  }
  ChromaticProfile prof(shrub_g, col);
  std::vector<Edge> regular;
  for (const Edge& e : shrub_g.edges()) {
    Color c = col.at(e);
    if (prof.color_degree(e.first, c) == prof.color_degree(e.second, c)) {
      regular.push_back(e);
    }
  }
  if (regular.empty()) return AliecStatus::Liec;
  if (regular.size() == 1 && regular[0] == re) {
    Color c = col.at(re);
    if (prof.color_degree(re.first, c) == 1 &&
        prof.color_degree(re.second, c) == 1) {
      return AliecStatus::ProperAliec;
    }
  }
  return AliecStatus::Invalid;
}

EdgeColoring sum_colorings(const std::vector<EdgeColoring>& parts) {
  EdgeColoring out;
  for (const EdgeColoring& p : parts) {
    for (const auto& [e, c] : p.assignment()) {
      if (out.has(e)) {
        throw Error("sum_colorings: edge " + edge_str(e) +
                    " assigned by multiple parts");
      }
      out.set(e, c);
    }
  }
  return out;
}

EdgeColoring permute_colors(const EdgeColoring& col,
                            const std::map<Color, Color>& mapping) {
  auto image = [&](Color c) {
    auto it = mapping.find(c);
    return it == mapping.end() ? c : it->second;
  };
  std::set<Color> used = col.used_colors();
  std::set<Color> seen;
  for (Color c : used) {
    if (!seen.insert(image(c)).second) {
      throw Error("permute_colors: mapping not injective on used colors");
    }
  }
  EdgeColoring out;
  for (const auto& [e, c] : col.assignment()) out.set(e, image(c));
  return out;
}

EdgeColoring apply_roles(const EdgeColoring& col,
                         const std::vector<Color>& roles) {
  std::map<Color, Color> m;
  for (size_t i = 0; i < roles.size(); ++i) m[(Color)i] = roles[i];
  return permute_colors(col, m);
}

EdgeColoring extend_through_trim(const EdgeColoring& trimmed_coloring,
                                 const TrimTrace& trace, int k) {
  if (k < 3) {
    throw Error("extend_through_trim requires k >= 3");
  }
  EdgeColoring cur = trimmed_coloring;

  // Incident colors, derived from the coloring itself (its domain is the
  // edge set of the current graph).
  auto colors_at = [&cur](Vertex v) {
    std::set<Color> out;
    for (const auto& [e, c] : cur.assignment()) {
      if (e.first == v || e.second == v) out.insert(c);
    }
    return out;
  };
  auto fresh_color = [&](const std::set<Color>& avoid) {
    for (Color c = 0; c < k; ++c) {
      if (!avoid.count(c)) return c;
    }
    throw Error("extend_through_trim: no free color (k too small)");
  };

  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    const TrimStep& s = *it;
    if (s.kind == TrimStep::Kind::PendantShorten) {
      std::set<Color> at = colors_at(s.attach);
      if (at.size() != 1) {
        throw Error("extend_through_trim: attach vertex is not a leaf");
      }
      Color g = fresh_color(at);
      cur.set(s.attach, s.removed_next, g);
      cur.set(s.removed_next, s.removed_leaf, g);
    } else {
      const auto& before = s.ear_before;
      const auto& after = s.ear_after;
      size_t m = after.size() - 1;  // trimmed ear edge count
      std::vector<Color> c(m);
      for (size_t j = 0; j < m; ++j) c[j] = cur.at(after[j], after[j + 1]);
      size_t i = 0;  // 1-based index of the first bichromatic internal
      for (size_t j = 1; j < m; ++j) {
        if (c[j - 1] != c[j]) {
          i = j;
          break;
        }
      }
      if (i == 0) {
        throw Error(
            "extend_through_trim: trimmed ear is monochromatic (input was "
            "not a liec)");
      }
      Color g = fresh_color({c[i - 1], c[i]});
      std::vector<Color> seq;
      seq.insert(seq.end(), c.begin(), c.begin() + i);
      seq.push_back(g);
      seq.push_back(g);
      seq.insert(seq.end(), c.begin() + i, c.end());
      // The reconnecting shortcut edge disappears; the original ear edges
      // take the spliced sequence in walk order.
      cur.erase(mk_edge(after[0], after[1]));
      for (size_t j = 0; j + 1 < before.size(); ++j) {
        cur.set(before[j], before[j + 1], seq[j]);
      }
    }
  }
  return cur;
}

}  // namespace liec
