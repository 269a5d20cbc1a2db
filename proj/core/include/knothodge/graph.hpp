#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace knothodge {

/// A directed edge; a loop has tail == head. Edge e owns two half-edges,
/// its tail end and its head end.
struct Edge {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Oriented uni->=3-valent graph at the half-edge level.
///
/// Vertices [0, externals) are external (univalent), vertices
/// [externals, externals + internals) are internal. The orientation is read
/// off the storage order: externals by index, then internals by index, then
/// edges by index, with each edge directed tail -> head.
class HalfEdgeGraph {
 public:
  HalfEdgeGraph() = default;
  /// Throws std::invalid_argument if an endpoint is out of range.
  HalfEdgeGraph(int externals, int internals, std::vector<Edge> edges);

  int externals() const { return externals_; }
  int internals() const { return internals_; }
  int vertex_count() const { return externals_ + internals_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// First Betti number after gluing the external vertices: edges - internals.
  int complexity() const { return edge_count() - internals_; }
  bool is_external(int vertex) const { return vertex < externals_; }

  const std::vector<Edge>& edges() const { return edges_; }

  /// Loops contribute 2 to the valence of their vertex.
  std::vector<int> valences() const;
  bool is_connected() const;
  /// External valence 1, internal valence >= 3, connected, at least one external.
  bool is_admissible() const;

  /// Deterministic text form "i=<externals> v=<internals> | t>h t>h ...".
  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument on malformed text.
  static HalfEdgeGraph parse(std::string_view text);

  friend bool operator==(const HalfEdgeGraph&, const HalfEdgeGraph&) = default;
  friend std::ostream& operator<<(std::ostream& os, const HalfEdgeGraph& g) { return os << g.str(); }

 private:
  int externals_ = 0;
  int internals_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace knothodge
