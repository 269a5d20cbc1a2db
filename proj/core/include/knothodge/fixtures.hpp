#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knothodge/graph.hpp"
#include "knothodge/hodge.hpp"
#include "knothodge/parity.hpp"
#include "knothodge/rational.hpp"
#include "knothodge/xpoly.hpp"

namespace knothodge {

/// Published reference data. Blank cells are absent entries (zero).
struct Fixture {
  std::string id;
  std::string description;
  std::variant<EulerTable, std::vector<XPoly>, std::vector<Integer>> payload;
};

inline constexpr int fixture_jmax = 23;
/// Highest Hodge degree printed in the Euler characteristic tables.
inline constexpr int fixture_imax = 23;

/// chi^pi_{ij} for j <= 23 and the printed columns i <= 23.
EulerTable fixture_homotopy(Parity parity);
/// chi_{ij} for j <= 23 and the printed columns i <= 23.
EulerTable fixture_homology(Parity parity);
/// Printed totals sum_{i <= 23} |chi^pi_{ij}|, element j - 1.
std::vector<Integer> fixture_homotopy_abs_totals(Parity parity);
/// Ranks of primitives of the chord diagram bialgebra by (i, j), j <= 12.
EulerTable fixture_chord_primitives();
std::vector<Integer> fixture_chord_primitive_totals();
/// P_0 .. P_4 of the generating function.
std::vector<XPoly> fixture_expansion(Parity parity);

struct SymmetryFixture {
  HalfEdgeGraph graph;
  std::uint64_t order = 0;
};
/// The three nonzero graphs with two legs, complexity 3 and four internal
/// vertices, with their symmetry orders 8, 4, 4.
std::vector<SymmetryFixture> fixture_symmetry_graphs();

std::vector<Fixture> all_fixtures();
/// Throws std::out_of_range for an unknown id.
const Fixture& fixture(std::string_view id);

}  // namespace knothodge
