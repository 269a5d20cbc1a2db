#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "knothodge/graphs.hpp"
#include "knothodge/parity.hpp"

namespace knothodge {

/// Sparse integer matrix; entries keyed by (row, column), zeros never stored.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, long> entries;

  long at(int row, int col) const;
  void add(int row, int col, long value);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// lhs * rhs; throws std::invalid_argument on a shape mismatch.
SparseMatrix multiply(const SparseMatrix& lhs, const SparseMatrix& rhs);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
long rank_exact(const SparseMatrix& m);

/// Graph complex in one Hodge degree i and complexity j, graded by the number
/// of internal vertices v = 0 .. 2j - i.
struct ChainComplexQ {
  int i = 0;
  int j = 0;
  Parity ambient = Parity::odd;
  long k = 1;
  std::vector<std::vector<GraphClass>> basis;  ///< basis[v]
  /// differentials[v] : C_v -> C_{v+1}, rows indexed by basis[v+1], columns by basis[v].
  std::vector<SparseMatrix> differentials;

  Grading grading() const { return {ambient, parity_of(k)}; }
  std::size_t total_size() const;
};

/// With `drop_loops` (meaningful for even d only) graphs with loops are
/// dropped, giving the quotient by the subcomplex they span.
ChainComplexQ build_complex(int i, int j, Parity ambient, long k = 1, bool drop_loops = false);

struct HomologyGroup {
  int v = 0;
  long dim = 0;
  DegreeExpr degree;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// dim_v = |basis_v| - rank(into v) - rank(out of v), for every v (zeros
/// included). Throws std::logic_error on a negative dimension.
std::vector<HomologyGroup> homology_dims(const ChainComplexQ& c);

/// Nonzero groups only.
std::vector<HomologyGroup> nonzero_homology(const ChainComplexQ& c);

/// sum_v (-1)^t dim_v at d = representative_dimension and k = c.k.
long euler_characteristic(const std::vector<HomologyGroup>& groups, Parity ambient);

struct DSquaredReport {
  bool ok = true;
  int v = -1;  ///< first failing composite differentials[v+1] * differentials[v]
  int row = -1;
  int col = -1;
  long value = 0;
};

DSquaredReport verify_d_squared(const ChainComplexQ& c);

}  // namespace knothodge
