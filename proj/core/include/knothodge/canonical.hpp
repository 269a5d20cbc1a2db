#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "knothodge/graph.hpp"
#include "knothodge/parity.hpp"

namespace knothodge {

/// Degree parities of the orientation set: external vertices carry degree -k,
/// internal vertices -d, edges d-1, and reversing an edge costs (-1)^d.
struct Grading {
  Parity ambient = Parity::odd;   ///< d
  Parity external = Parity::odd;  ///< k
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// Result of canonical labeling.
///
/// `graph` is the canonical representative: vertices renumbered by canonical
/// position, edges directed from the lower to the higher position and sorted.
/// `position[v]` is the canonical position of input vertex v for one fixed
/// canonical labeling. `automorphisms` lists every vertex permutation of
/// `graph` that preserves it (identity included), as position -> position maps.
struct CanonicalForm {
  HalfEdgeGraph graph;
  std::vector<int> position;
  std::vector<std::vector<int>> automorphisms;
};

/// Exhaustive individualization-refinement canonical labeling. Isomorphic
/// inputs (kind-preserving, multiplicities respected) yield identical `graph`.
CanonicalForm canonical_form(const HalfEdgeGraph& g);

/// The graph obtained by renumbering vertices through `position`, directing
/// every edge low -> high and sorting the edge list.
HalfEdgeGraph relabel(const HalfEdgeGraph& g, std::span<const int> position);

/// Koszul sign s with input = s * relabel(input, position) as oriented graphs.
/// Parallel edges are matched in their input order.
int orientation_sign(const HalfEdgeGraph& input, std::span<const int> position, Grading grading);

/// True when the orientation relations force the class of the canonical graph
/// to vanish, i.e. some automorphism acts with sign -1.
bool vanishes(const CanonicalForm& form, Grading grading);

/// Order of the automorphism group at the half-edge level: vertex
/// automorphisms times permutations of parallel edges times loop flips.
std::uint64_t automorphism_order(const CanonicalForm& form);

}  // namespace knothodge
