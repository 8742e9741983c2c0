#pragma once

#include <string>
#include <vector>

namespace extdim {

struct Arrow {
  std::string label;
  int src = 0;
  int tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int vertex_index(const std::string& label) const;  // -1 if absent
  int arrow_index(const std::string& label) const;
  Quiver opposite() const;
  /// Vertex sets of the connected components of the underlying graph.
  std::vector<std::vector<int>> components() const;
  bool has_oriented_cycle() const;
};

enum class GraphFamily { Dynkin, Euclidean, Wild };

struct GraphClass {
  GraphFamily family = GraphFamily::Wild;
  std::string type;  // "A3", "D4", "E6", "~A2", "~D4", "~E6", "wild"

  bool is_dynkin() const { return family == GraphFamily::Dynkin; }
  std::string str() const { return type; }
};

/// ADE / affine / wild type of the underlying graph of a connected quiver
/// (vertex subset `comp`; the whole quiver when empty).
GraphClass classify_graph(const Quiver& q, const std::vector<int>& comp = {});
/// One class per connected component.
std::vector<GraphClass> classify_components(const Quiver& q);

}  // namespace extdim
