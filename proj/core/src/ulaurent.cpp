#include "knothodge/ulaurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knothodge {

ULaurent::ULaurent(int min_degree, std::vector<XPoly> coefficients)
    : min_degree_(min_degree), coeffs_(std::move(coefficients)) {
  normalize();
}

ULaurent ULaurent::monomial(const XPoly& c, int power) { return ULaurent(power, {c}); }

ULaurent ULaurent::from_series(const USeries& s) {
  return ULaurent(0, std::vector<XPoly>(s.coefficients().begin(), s.coefficients().end()));
}

void ULaurent::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_degree_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) min_degree_ = 0;
}

XPoly ULaurent::coefficient(int k) const {
  if (is_zero() || k < min_degree_ || k > max_degree()) return {};
  return coeffs_[static_cast<std::size_t>(k - min_degree_)];
}

ULaurent& ULaurent::operator+=(const ULaurent& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(min_degree_, rhs.min_degree_);
  const int hi = std::max(max_degree(), rhs.max_degree());
  std::vector<XPoly> out(static_cast<std::size_t>(hi - lo + 1));
  for (int k = lo; k <= hi; ++k) out[static_cast<std::size_t>(k - lo)] = coefficient(k) + rhs.coefficient(k);
  *this = ULaurent(lo, std::move(out));
  return *this;
}

ULaurent operator*(const ULaurent& lhs, const ULaurent& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<XPoly> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t a = 0; a < lhs.coeffs_.size(); ++a) {
    if (lhs.coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) {
      if (rhs.coeffs_[b].is_zero()) continue;
      out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
    }
  }
  return ULaurent(lhs.min_degree_ + rhs.min_degree_, std::move(out));
}

ULaurent operator*(ULaurent lhs, const XPoly& rhs) {
  for (auto& c : lhs.coeffs_) c *= rhs;
  lhs.normalize();
  return lhs;
}

USeries ULaurent::to_series(int order) const {
  if (!is_zero() && min_degree_ < 0) {
    std::ostringstream os;
    os << "ULaurent::to_series: nonzero coefficient at u^" << min_degree_;
    throw std::domain_error(os.str());
  }
  USeries s(order);
  for (int k = std::max(0, min_degree_); k <= std::min(order, max_degree()); ++k) s.set(k, coefficient(k));
  return s;
}

std::string ULaurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = min_degree_; k <= max_degree(); ++k) {
    XPoly c = coefficient(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")*u^" << k;
  }
  return os.str();
}

}  // namespace knothodge
