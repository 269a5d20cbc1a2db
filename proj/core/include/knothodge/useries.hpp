#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "knothodge/rational.hpp"
#include "knothodge/xpoly.hpp"

namespace knothodge {

/// Power series in the complexity variable u, truncated after u^order, with
/// XPoly coefficients. The truncation order travels with the value; every
/// binary operation checks that both operands agree on it and throws
/// std::invalid_argument otherwise.
class USeries {
 public:
  USeries() : USeries(0) {}
  explicit USeries(int order);
  /// Missing high coefficients are zero; coefficients beyond `order` are dropped.
  USeries(int order, std::vector<XPoly> coefficients);

  static USeries constant(int order, const XPoly& value);
  static USeries one(int order) { return constant(order, XPoly(1)); }
  /// c * u^power (zero if power > order).
  static USeries monomial(int order, const XPoly& c, int power);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const XPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  std::span<const XPoly> coefficients() const { return coeffs_; }
  void set(int k, XPoly value);

  /// Smallest k with a nonzero coefficient, or order()+1 for the zero series.
  int valuation() const;
  bool is_zero() const { return valuation() > order(); }

  /// Same series read at a different truncation order (zero-padded when raising).
  USeries with_order(int order) const;

  USeries& operator+=(const USeries& rhs);
  USeries& operator-=(const USeries& rhs);
  USeries& operator*=(const XPoly& rhs);

  friend USeries operator+(USeries lhs, const USeries& rhs) { return lhs += rhs; }
  friend USeries operator-(USeries lhs, const USeries& rhs) { return lhs -= rhs; }
  friend USeries operator*(const USeries& lhs, const USeries& rhs);
  friend USeries operator*(USeries lhs, const XPoly& rhs) { return lhs *= rhs; }
  friend USeries operator*(const XPoly& lhs, USeries rhs) { return rhs *= lhs; }
  USeries operator-() const;

  friend bool operator==(const USeries& a, const USeries& b) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const USeries& s) { return os << s.str(); }

 private:
  std::vector<XPoly> coeffs_;
};

/// Cauchy product truncated at the common order.
USeries series_mul(const USeries& a, const USeries& b);

/// Formal exponential; the constant coefficient must be zero.
USeries series_exp(const USeries& v);

/// Formal logarithm; the constant coefficient must be exactly 1.
USeries series_log(const USeries& s);

/// s^alpha = exp(alpha * log s) for a polynomial exponent; s(0) must be 1.
USeries series_pow_poly(const USeries& s, const XPoly& alpha);

/// sum_j outer_j * t^j. `t` must have zero constant term; only the
/// powers j <= order / valuation(t) can contribute and only those are formed.
USeries series_compose(const USeries& outer, const USeries& t);

/// Substitutes y -> inner(x) in every coefficient.
USeries substitute_x(const USeries& s, const XPoly& inner);

/// Evaluates every coefficient at x = at; the result has constant coefficients.
USeries specialize(const USeries& s, const Rational& at);

}  // namespace knothodge
