#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "knothodge/useries.hpp"
#include "knothodge/xpoly.hpp"

namespace knothodge {

/// Finite Laurent polynomial in u with XPoly coefficients:
/// sum_k coefficient(k) u^k for min_degree() <= k <= max_degree().
/// Leading and trailing coefficients are nonzero unless the value is zero.
class ULaurent {
 public:
  ULaurent() = default;
  ULaurent(int min_degree, std::vector<XPoly> coefficients);

  static ULaurent monomial(const XPoly& c, int power);
  static ULaurent from_series(const USeries& s);

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
  XPoly coefficient(int k) const;

  ULaurent& operator+=(const ULaurent& rhs);
  friend ULaurent operator+(ULaurent lhs, const ULaurent& rhs) { return lhs += rhs; }
  friend ULaurent operator*(const ULaurent& lhs, const ULaurent& rhs);
  friend ULaurent operator*(ULaurent lhs, const XPoly& rhs);

  friend bool operator==(const ULaurent& a, const ULaurent& b) = default;

  /// Truncated power series at `order`. Throws std::domain_error if any
  /// negative power carries a nonzero coefficient.
  USeries to_series(int order) const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ULaurent& p) { return os << p.str(); }

 private:
  void normalize();

  int min_degree_ = 0;
  std::vector<XPoly> coeffs_;
};

}  // namespace knothodge
