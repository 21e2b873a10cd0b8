#include "pathhom/quiver.hpp"

#include <algorithm>
#include <map>

namespace pathhom {

int Quiver::vertex_index(const std::string& name) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
  require(it != vertices.end() && *it == name, "ValidationError", "unknown vertex " + name);
  return int(it - vertices.begin());
}

int Quiver::power() const {
  std::map<std::pair<int, int>, int> counts;
  int p = 0;
  for (const Arrow& a : arrows) p = std::max(p, ++counts[{a.tail, a.head}]);
  return p;
}

bool Quiver::has_directed_square() const {
  // Two distinct composable length-2 paths with common endpoints.
  std::map<std::pair<int, int>, int> path2;
  for (const Arrow& a : arrows)
    for (const Arrow& b : arrows) {
      if (a.head != b.tail) continue;
      if (++path2[{a.tail, b.head}] > 1) return true;
    }
  return false;
}

Quiver Quiver::make(std::vector<std::string> vertex_names,
                    std::vector<std::tuple<std::string, std::string, std::string>> arrow_specs) {
  Quiver q;
  q.vertices = std::move(vertex_names);
  std::sort(q.vertices.begin(), q.vertices.end());
  for (auto& [label, tail, head] : arrow_specs)
    q.arrows.push_back({label, q.vertex_index(tail), q.vertex_index(head)});
  std::sort(q.arrows.begin(), q.arrows.end(),
            [](const Arrow& a, const Arrow& b) { return a.label < b.label; });
  q.validate();
  return q;
}

void Quiver::validate() const {
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    require(vertices[i] < vertices[i + 1], "ValidationError",
            "duplicate vertex name " + vertices[i]);
  for (size_t i = 0; i + 1 < arrows.size(); ++i)
    require(arrows[i].label < arrows[i + 1].label, "ValidationError",
            "duplicate arrow label " + arrows[i].label);
  for (const Arrow& a : arrows)
    require(a.tail >= 0 && a.tail < vertex_count() && a.head >= 0 && a.head < vertex_count(),
            "ValidationError", "arrow endpoints out of range");
}

int Digraph::vertex_index(const std::string& name) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
  require(it != vertices.end() && *it == name, "ValidationError", "unknown vertex " + name);
  return int(it - vertices.begin());
}

Quiver Digraph::quiver() const {
  Quiver q;
  q.vertices = vertices;
  for (auto [u, v] : edges)
    q.arrows.push_back({vertices[u] + ">" + vertices[v], u, v});
  std::sort(q.arrows.begin(), q.arrows.end(),
            [](const Quiver::Arrow& a, const Quiver::Arrow& b) { return a.label < b.label; });
  q.validate();
  return q;
}

bool Digraph::triangle_free() const {
  // No length-2 path may close up: neither onto an edge (a directed
  // triangle) nor onto its own start (a directed 2-cycle, the degenerate
  // triangle). The 2-cycle case matters: its composite lands on a degenerate
  // arrow and the two quiver theories genuinely differ there.
  for (auto [a, b] : edges)
    for (auto [c, d] : edges) {
      if (b != c) continue;
      if (a == d) return false;
      if (has_edge(a, d)) return false;
    }
  return true;
}

Digraph Digraph::make(std::vector<std::string> vertex_names,
                      std::vector<std::pair<std::string, std::string>> edge_specs) {
  Digraph g;
  g.vertices = std::move(vertex_names);
  std::sort(g.vertices.begin(), g.vertices.end());
  for (size_t i = 0; i + 1 < g.vertices.size(); ++i)
    require(g.vertices[i] < g.vertices[i + 1], "ValidationError",
            "duplicate vertex name " + g.vertices[i]);
  for (auto& [u, v] : edge_specs) {
    int ui = g.vertex_index(u), vi = g.vertex_index(v);
    require(ui != vi, "ValidationError", "self-loop " + u + " -> " + v + " not allowed");
    require(!g.edges.count({ui, vi}), "ValidationError", "duplicate edge " + u + " -> " + v);
    g.edges.insert({ui, vi});
  }
  return g;
}

int BoxQuiver::vertex_of(int lv, int rv) const {
  auto it = vindex_.find({lv, rv});
  internal_check(it != vindex_.end(), "BoxLookup", "unknown box vertex pair");
  return it->second;
}

int BoxQuiver::arrow_of(int side, int a, int parked) const {
  auto it = aindex_.find({side, a, parked});
  internal_check(it != aindex_.end(), "BoxLookup", "unknown box arrow triple");
  return it->second;
}

BoxQuiver box(const Quiver& a, const Quiver& b) {
  BoxQuiver out;
  std::vector<std::string> vnames;
  auto vname = [&](int i, int j) { return "(" + a.vertices[i] + "," + b.vertices[j] + ")"; };
  for (int i = 0; i < a.vertex_count(); ++i)
    for (int j = 0; j < b.vertex_count(); ++j) vnames.push_back(vname(i, j));
  std::vector<std::tuple<std::string, std::string, std::string>> arrow_specs;
  for (int ai = 0; ai < a.arrow_count(); ++ai)
    for (int j = 0; j < b.vertex_count(); ++j)
      arrow_specs.push_back({"(" + a.arrows[ai].label + "," + b.vertices[j] + ")",
                             vname(a.arrows[ai].tail, j), vname(a.arrows[ai].head, j)});
  for (int bi = 0; bi < b.arrow_count(); ++bi)
    for (int i = 0; i < a.vertex_count(); ++i)
      arrow_specs.push_back({"(" + a.vertices[i] + "," + b.arrows[bi].label + ")",
                             vname(i, b.arrows[bi].tail), vname(i, b.arrows[bi].head)});
  out.q = Quiver::make(vnames, arrow_specs);

  out.vertex_pair.resize(out.q.vertex_count());
  for (int i = 0; i < a.vertex_count(); ++i)
    for (int j = 0; j < b.vertex_count(); ++j) {
      int idx = out.q.vertex_index(vname(i, j));
      out.vertex_pair[idx] = {i, j};
      out.vindex_[{i, j}] = idx;
    }
  out.arrow_info.resize(out.q.arrow_count());
  std::map<std::string, int> by_label;
  for (int k = 0; k < out.q.arrow_count(); ++k) by_label[out.q.arrows[k].label] = k;
  for (int ai = 0; ai < a.arrow_count(); ++ai)
    for (int j = 0; j < b.vertex_count(); ++j) {
      int k = by_label.at("(" + a.arrows[ai].label + "," + b.vertices[j] + ")");
      out.arrow_info[k] = {0, ai, j};
      out.aindex_[{0, ai, j}] = k;
    }
  for (int bi = 0; bi < b.arrow_count(); ++bi)
    for (int i = 0; i < a.vertex_count(); ++i) {
      int k = by_label.at("(" + a.vertices[i] + "," + b.arrows[bi].label + ")");
      out.arrow_info[k] = {1, bi, i};
      out.aindex_[{1, bi, i}] = k;
    }
  return out;
}

Digraph box(const Digraph& a, const Digraph& b) {
  std::vector<std::string> vnames;
  auto vname = [&](const std::string& u, const std::string& v) {
    return "(" + u + "," + v + ")";
  };
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) vnames.push_back(vname(u, v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, w] : a.edges)
    for (const auto& v : b.vertices)
      edges.push_back({vname(a.vertices[u], v), vname(a.vertices[w], v)});
  for (auto [v, w] : b.edges)
    for (const auto& u : a.vertices)
      edges.push_back({vname(u, b.vertices[v]), vname(u, b.vertices[w])});
  return Digraph::make(vnames, edges);
}

Digraph simplicial_digraph(const SimplicialComplexInput& s, SimplicialVariant variant) {
  require(!s.facets.empty(), "ValidationError", "empty facet list");
  std::set<std::vector<std::string>> simplices;
  for (const auto& f : s.facets) {
    std::vector<std::string> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    require(!sorted.empty(), "ValidationError", "empty facet");
    int m = int(sorted.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<std::string> face;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) face.push_back(sorted[i]);
      simplices.insert(face);
    }
  }
  auto name_of = [](const std::vector<std::string>& simplex) {
    std::string name;
    for (const auto& v : simplex) name += (name.empty() ? "" : "-") + v;
    return name;
  };
  std::vector<std::string> vnames;
  for (const auto& sx : simplices) vnames.push_back(name_of(sx));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& big : simplices)
    for (const auto& small : simplices) {
      if (small.size() >= big.size()) continue;
      if (variant == SimplicialVariant::G && small.size() + 1 != big.size()) continue;
      if (std::includes(big.begin(), big.end(), small.begin(), small.end()))
        edges.push_back({name_of(big), name_of(small)});
    }
  return Digraph::make(vnames, edges);
}

}  // namespace pathhom
