#pragma once
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pathhom/errors.hpp"

namespace pathhom {

// Finite quiver. Only the non-degenerate arrows are stored; the degenerate
// loop at each vertex is implicit. Vertices and arrows are kept sorted by
// name/label so that all enumerations are reproducible.
struct Quiver {
  struct Arrow {
    std::string label;
    int tail = 0, head = 0;
  };

  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_count() const { return int(vertices.size()); }
  int arrow_count() const { return int(arrows.size()); }
  int vertex_index(const std::string& name) const;

  // Largest number of parallel arrows between one ordered vertex pair.
  int power() const;
  bool has_directed_square() const;

  static Quiver make(std::vector<std::string> vertex_names,
                     std::vector<std::tuple<std::string, std::string, std::string>> arrow_specs);
  void validate() const;
};

// Digraph: at most one edge per ordered vertex pair, no stored self-loops.
struct Digraph {
  std::vector<std::string> vertices;
  std::set<std::pair<int, int>> edges;

  int vertex_index(const std::string& name) const;
  bool has_edge(int u, int v) const { return edges.count({u, v}) > 0; }
  Quiver quiver() const;  // arrow labels "u>v"
  bool triangle_free() const;

  static Digraph make(std::vector<std::string> vertex_names,
                      std::vector<std::pair<std::string, std::string>> edge_specs);
};

// Box product. Arrows are (arrow, vertex) and (vertex, arrow) pairs; the
// mapping data is kept so chains can be split into their two sides.
struct BoxQuiver {
  Quiver q;
  // Per box vertex: (left vertex, right vertex).
  std::vector<std::pair<int, int>> vertex_pair;
  // Per box arrow: side (0 = left moves, 1 = right moves), moving arrow index,
  // parked vertex index on the other side.
  struct ArrowInfo {
    int side, arrow, parked;
  };
  std::vector<ArrowInfo> arrow_info;

  int vertex_of(int lv, int rv) const;
  // Box arrow index; side 0: (arrow a of L, vertex rv), side 1: (lv, arrow a).
  int arrow_of(int side, int a, int parked) const;

 private:
  friend BoxQuiver box(const Quiver&, const Quiver&);
  std::map<std::pair<int, int>, int> vindex_;
  std::map<std::tuple<int, int, int>, int> aindex_;
};

BoxQuiver box(const Quiver& a, const Quiver& b);
Digraph box(const Digraph& a, const Digraph& b);

// Digraphs of a simplicial complex: vertices are all simplices; arrows go
// from a simplex to a face of codimension one (variant G) or to any proper
// face (variant G').
struct SimplicialComplexInput {
  std::vector<std::vector<std::string>> facets;
};
enum class SimplicialVariant { G, GPrime };
Digraph simplicial_digraph(const SimplicialComplexInput& s, SimplicialVariant variant);

}  // namespace pathhom
