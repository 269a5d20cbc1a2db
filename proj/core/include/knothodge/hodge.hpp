#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "knothodge/parity.hpp"
#include "knothodge/rational.hpp"
#include "knothodge/useries.hpp"

namespace knothodge {

enum class TableKind { homology, homotopy };

std::string_view to_string(TableKind kind);
/// Accepts "homology" / "homotopy"; throws std::invalid_argument otherwise.
TableKind parse_table_kind(std::string_view text);

/// Euler characteristics indexed by Hodge degree i >= 1 and complexity
/// 1 <= j <= jmax. Absent cells are zero; zero is never stored.
class EulerTable {
 public:
  /// Key order is (j, i), so iteration runs row by row.
  using Key = std::pair<int, int>;

  EulerTable(TableKind kind, Parity parity, int jmax);

  TableKind kind() const { return kind_; }
  Parity parity() const { return parity_; }
  int jmax() const { return jmax_; }

  Integer at(int i, int j) const;
  /// Throws std::out_of_range unless i >= 1 and 1 <= j <= jmax.
  void set(int i, int j, const Integer& value);
  const std::map<Key, Integer>& entries() const { return entries_; }

  /// Cells with j <= jmax and i <= imax.
  EulerTable restricted(int jmax, int imax = std::numeric_limits<int>::max()) const;
  /// Sum of row j over all i.
  Integer row_sum(int j) const;

  friend bool operator==(const EulerTable&, const EulerTable&) = default;

 private:
  TableKind kind_;
  Parity parity_;
  int jmax_;
  std::map<Key, Integer> entries_;
};

/// chi_{ij}: the coefficients of x^i u^j (i >= 1) of a generating function.
/// Throws std::domain_error on a non-integer coefficient.
EulerTable homology_table(const USeries& f, Parity parity, int jmax);

/// chi^pi_{ij} from F = prod (1 - x^i u^j)^{-chi^pi_{ij}}: with L = log F,
/// chi^pi_{a,b} = sum_{m | gcd(a,b)} mu(m)/m L_{a/m, b/m}.
/// Throws std::domain_error if a value is not an integer, if L has a nonzero
/// x^0 u^b term with b >= 1, or if f is truncated below jmax.
EulerTable homotopy_from_homology(const USeries& f, Parity parity, int jmax);

/// The forward product prod_{i,j} (1 - x^i u^j)^{-chi^pi_{ij}} truncated after
/// u^order; with `x_cap` every coefficient is truncated to x-degree <= x_cap.
USeries homology_from_homotopy(const EulerTable& homotopy, int order, std::optional<int> x_cap = std::nullopt);

struct ParitySum {
  int j = 0;
  Integer even;  ///< sum over even i
  Integer odd;   ///< sum over odd i
  Integer total;
};

/// (1/2j) sum_{k | j, k odd} mu(k) 2^{j/k}: the even-Hodge-degree row sum of
/// the odd-d homotopy table.
Integer even_degree_sum_closed_form(long j);
/// Row totals of the homotopy tables: odd d gives 1 at j = 1 and 0 after;
/// even d gives (-1)^j for j <= 2 and 0 after.
Integer homotopy_total(Parity parity, long j);

/// Per-row even/odd sums of a homotopy table. With `check`, rows are compared
/// with homotopy_total and (odd parity, j >= 2) even_degree_sum_closed_form;
/// a mismatch throws std::logic_error.
std::vector<ParitySum> parity_sums(const EulerTable& homotopy, bool check = true);

}  // namespace knothodge
