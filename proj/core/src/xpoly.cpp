#include "knothodge/xpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knothodge {

XPoly::XPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

XPoly::XPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

XPoly::XPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

XPoly XPoly::monomial(const Rational& c, int power) {
  if (power < 0) throw std::invalid_argument("XPoly::monomial: negative power");
  XPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational XPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool XPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Rational XPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

XPoly XPoly::compose(const XPoly& inner) const {
  XPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += XPoly(*it);
  }
  return acc;
}

XPoly XPoly::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  if (degree() <= max_degree) return *this;
  return XPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

XPoly operator*(const XPoly& lhs, const XPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  Rational term;
  for (std::size_t a = 0; a < lhs.coeffs_.size(); ++a) {
    if (lhs.coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) {
      if (rhs.coeffs_[b] == 0) continue;
      mpq_mul(term.get_mpq_t(), lhs.coeffs_[a].get_mpq_t(), rhs.coeffs_[b].get_mpq_t());
      out[a + b] += term;
    }
  }
  return XPoly(std::move(out));
}

XPoly& XPoly::operator*=(const XPoly& rhs) { return *this = *this * rhs; }

XPoly& XPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

XPoly XPoly::operator-() const {
  XPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string XPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || k == 0) os << mag.get_str();
    if (k >= 1) {
      if (!unit) os << '*';
      os << 'x';
      if (k >= 2) os << '^' << k;
    }
  }
  return os.str();
}

XPoly binomial(const XPoly& top, int k) {
  if (k < 0) throw std::invalid_argument("binomial: negative k");
  XPoly acc(1);
  Rational factorial = 1;
  for (int m = 0; m < k; ++m) {
    acc *= top - XPoly(m);
    factorial *= m + 1;
  }
  acc *= Rational(1) / factorial;
  return acc;
}

}  // namespace knothodge
