#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "knothodge/canonical.hpp"
#include "knothodge/graph.hpp"
#include "knothodge/hodge.hpp"
#include "knothodge/parity.hpp"

namespace knothodge {

/// Affine degree in the ambient dimension: d_coeff * d + constant.
struct DegreeExpr {
  long d_coeff = 0;
  long constant = 0;

  long at(long d) const { return d_coeff * d + constant; }
  /// "3d-9", "d-3", "2d", "-1".
  std::string str() const;
  friend bool operator==(const DegreeExpr&, const DegreeExpr&) = default;
};

/// t = (d-1)j - k*i - v.
DegreeExpr graph_degree(int i, int j, int v, long k);

/// Canonical representative of a graph modulo orientation relations.
struct GraphClass {
  HalfEdgeGraph graph;  ///< canonical form
  bool zero = false;
  int i = 0;
  int j = 0;
  int v = 0;

  DegreeExpr degree(long k = 1) const { return graph_degree(i, j, v, k); }
  friend bool operator==(const GraphClass& a, const GraphClass& b) { return a.graph == b.graph && a.zero == b.zero; }
  friend bool operator<(const GraphClass& a, const GraphClass& b);
};

/// Canonical class of g and the sign s with g = s * class as oriented graphs.
/// For a zero class the sign is still the relabeling sign.
std::pair<GraphClass, int> canonical(const HalfEdgeGraph& g, Grading grading);

/// Every expansion of every internal vertex of g: the vertex keeps the part
/// holding its first half-edge, the other part moves to a new internal vertex
/// appended last, and a new edge old -> new is appended last. Both parts have
/// at least two half-edges. Output order is deterministic.
std::vector<HalfEdgeGraph> expansions(const HalfEdgeGraph& g);

/// Bounds: 1 <= i <= 2j and 0 <= v <= 2j - i. Throws std::out_of_range.
void check_bounds(int i, int j, int v);

/// All isomorphism classes of admissible graphs with i externals, complexity
/// j and v internals (zero or not, as canonical graphs), sorted.
const std::vector<HalfEdgeGraph>& enumerate_all(int i, int j, int v);

/// Nonzero classes for the given gradings, sorted.
std::vector<GraphClass> enumerate(int i, int j, int v, Parity ambient, Parity external = Parity::odd);

bool has_loop(const HalfEdgeGraph& g);

/// For even d and j >= 2 the loop graphs span an acyclic subcomplex, and the
/// quotient by it is the complex the low-complexity listings refer to.
inline bool loops_dropped(int j, Parity ambient) { return ambient == Parity::even && j >= 2; }

/// Nonzero classes over all v in that reduced complex, sorted by (v, class).
std::vector<GraphClass> reduced_classes(int i, int j, Parity ambient, Parity external = Parity::odd);

/// The expansion differential of a class with integer coefficients, sorted
/// by class, zero terms dropped. Zero classes map to the empty sum.
std::vector<std::pair<GraphClass, long>> differential(const GraphClass& c, Grading grading);

/// Half-edge level symmetry order of g.
std::uint64_t automorphism_order(const HalfEdgeGraph& g);

/// The concrete dimension used to fix signs (-1)^t in Euler characteristics.
inline long representative_dimension(Parity ambient) { return ambient == Parity::odd ? 3 : 4; }
inline long representative_external_degree(Parity external) { return external == Parity::odd ? 1 : 2; }

/// chi^pi_{ij} = sum_v (-1)^t #classes for 1 <= j <= jmax, 1 <= i <= 2j,
/// evaluated at d = representative_dimension and k = representative_external_degree.
EulerTable euler_table(Parity ambient, int jmax, Parity external = Parity::odd);

}  // namespace knothodge
