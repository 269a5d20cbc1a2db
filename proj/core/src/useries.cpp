#include "knothodge/useries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knothodge {

namespace {

void require_same_order(const USeries& a, const USeries& b, const char* what) {
  if (a.order() != b.order()) {
    std::ostringstream os;
    os << what << ": truncation orders differ (" << a.order() << " vs " << b.order() << ')';
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

USeries::USeries(int order) {
  if (order < 0) throw std::invalid_argument("USeries: negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

USeries::USeries(int order, std::vector<XPoly> coefficients) : USeries(order) {
  const std::size_t n = std::min(coefficients.size(), coeffs_.size());
  for (std::size_t k = 0; k < n; ++k) coeffs_[k] = std::move(coefficients[k]);
}

USeries USeries::constant(int order, const XPoly& value) {
  USeries s(order);
  s.coeffs_[0] = value;
  return s;
}

USeries USeries::monomial(int order, const XPoly& c, int power) {
  if (power < 0) throw std::invalid_argument("USeries::monomial: negative power");
  USeries s(order);
  if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
  return s;
}

void USeries::set(int k, XPoly value) {
  if (k < 0 || k > order()) throw std::out_of_range("USeries::set: index beyond truncation order");
  coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

int USeries::valuation() const {
  for (int k = 0; k <= order(); ++k) {
    if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) return k;
  }
  return order() + 1;
}

USeries USeries::with_order(int order) const {
  return USeries(order, std::vector<XPoly>(coeffs_.begin(), coeffs_.end()));
}

USeries& USeries::operator+=(const USeries& rhs) {
  require_same_order(*this, rhs, "USeries +");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

USeries& USeries::operator-=(const USeries& rhs) {
  require_same_order(*this, rhs, "USeries -");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

USeries& USeries::operator*=(const XPoly& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

USeries operator*(const USeries& lhs, const USeries& rhs) {
  require_same_order(lhs, rhs, "USeries *");
  const int order = lhs.order();
  USeries out(order);
  for (int p = 0; p <= order; ++p) {
    const XPoly& a = lhs.coeffs_[static_cast<std::size_t>(p)];
    if (a.is_zero()) continue;
    for (int q = 0; p + q <= order; ++q) {
      const XPoly& b = rhs.coeffs_[static_cast<std::size_t>(q)];
      if (b.is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(p + q)] += a * b;
    }
  }
  return out;
}

USeries USeries::operator-() const {
  USeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string USeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    const XPoly& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
    } else {
      os << '(' << c << ")*u";
      if (k >= 2) os << '^' << k;
    }
  }
  if (first) os << '0';
  os << " + O(u^" << order() + 1 << ')';
  return os.str();
}

USeries series_mul(const USeries& a, const USeries& b) { return a * b; }

USeries series_exp(const USeries& v) {
  if (!v[0].is_zero()) throw std::domain_error("series_exp: constant coefficient must be zero");
  const int order = v.order();
  // f' = v' f, i.e. n f_n = sum_{k=1}^{n} k v_k f_{n-k}.
  std::vector<XPoly> f(static_cast<std::size_t>(order) + 1);
  f[0] = XPoly(1);
  std::vector<int> support;
  for (int k = 1; k <= order; ++k) {
    if (!v[k].is_zero()) support.push_back(k);
  }
  for (int n = 1; n <= order; ++n) {
    XPoly acc;
    for (int k : support) {
      if (k > n) break;
      const XPoly& prev = f[static_cast<std::size_t>(n - k)];
      if (prev.is_zero()) continue;
      acc += (v[k] * prev) * Rational(k);
    }
    acc *= Rational(1, n);
    f[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return USeries(order, std::move(f));
}

USeries series_log(const USeries& s) {
  if (s[0] != XPoly(1)) throw std::domain_error("series_log: constant coefficient must be 1");
  const int order = s.order();
  // g' = s'/s, i.e. n g_n = n s_n - sum_{k=1}^{n-1} k g_k s_{n-k}.
  std::vector<XPoly> g(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) {
    XPoly acc = s[n] * Rational(n);
    for (int k = 1; k < n; ++k) {
      const XPoly& gk = g[static_cast<std::size_t>(k)];
      if (gk.is_zero() || s[n - k].is_zero()) continue;
      acc -= (gk * s[n - k]) * Rational(k);
    }
    acc *= Rational(1, n);
    g[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return USeries(order, std::move(g));
}

USeries series_pow_poly(const USeries& s, const XPoly& alpha) {
  if (s[0] != XPoly(1)) throw std::domain_error("series_pow_poly: constant coefficient must be 1");
  return series_exp(series_log(s) * alpha);
}

USeries series_compose(const USeries& outer, const USeries& t) {
  require_same_order(outer, t, "series_compose");
  if (!t[0].is_zero()) throw std::domain_error("series_compose: inner series must have zero constant term");
  const int order = outer.order();
  const int val = t.valuation();
  const int top = (val > order) ? 0 : order / val;
  // Horner over the contributing powers only.
  USeries acc = USeries::constant(order, outer[top]);
  for (int j = top - 1; j >= 0; --j) {
    acc = acc * t;
    acc += USeries::constant(order, outer[j]);
  }
  return acc;
}

USeries substitute_x(const USeries& s, const XPoly& inner) {
  std::vector<XPoly> out;
  out.reserve(s.coefficients().size());
  for (const auto& c : s.coefficients()) out.push_back(c.compose(inner));
  return USeries(s.order(), std::move(out));
}

USeries specialize(const USeries& s, const Rational& at) {
  std::vector<XPoly> out;
  out.reserve(s.coefficients().size());
  for (const auto& c : s.coefficients()) out.emplace_back(c.evaluate(at));
  return USeries(s.order(), std::move(out));
}

}  // namespace knothodge
