#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "knothodge/rational.hpp"

namespace knothodge {

/// Dense univariate polynomial in the Hodge variable x with rational
/// coefficients. Coefficient k multiplies x^k. Trailing zeros are never
/// stored, so degree() is exact; the zero polynomial has degree -1.
class XPoly {
 public:
  static constexpr int zero_degree = -1;

  XPoly() = default;
  XPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  XPoly(long constant) : XPoly(Rational(constant)) {}  // NOLINT
  explicit XPoly(std::vector<Rational> coefficients);
  XPoly(std::initializer_list<Rational> coefficients);

  /// c * x^power.
  static XPoly monomial(const Rational& c, int power);
  /// The polynomial x.
  static XPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^k; zero outside [0, degree()].
  Rational coefficient(int k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool has_integer_coefficients() const;

  Rational evaluate(const Rational& at) const;

  /// this(inner(x)).
  XPoly compose(const XPoly& inner) const;

  /// Drops every term of degree > max_degree.
  XPoly truncated(int max_degree) const;

  XPoly& operator+=(const XPoly& rhs);
  XPoly& operator-=(const XPoly& rhs);
  XPoly& operator*=(const XPoly& rhs);
  XPoly& operator*=(const Rational& rhs);

  friend XPoly operator+(XPoly lhs, const XPoly& rhs) { return lhs += rhs; }
  friend XPoly operator-(XPoly lhs, const XPoly& rhs) { return lhs -= rhs; }
  friend XPoly operator*(const XPoly& lhs, const XPoly& rhs);
  friend XPoly operator*(XPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend XPoly operator*(const Rational& lhs, XPoly rhs) { return rhs *= lhs; }
  XPoly operator-() const;

  friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest power first: "x^4 + x^2 - x".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << p.str(); }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// y(y-1)...(y-k+1) / k!, the binomial coefficient with a polynomial top.
XPoly binomial(const XPoly& top, int k);

}  // namespace knothodge
