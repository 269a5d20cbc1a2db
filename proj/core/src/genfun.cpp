#include "knothodge/genfun.hpp"

#include <sstream>
#include <stdexcept>

#include "knothodge/arith.hpp"
#include "knothodge/gamma.hpp"

namespace knothodge {

XPoly necklace(long ell) {
  if (ell < 1) throw std::invalid_argument("necklace: l must be >= 1");
  XPoly sum;
  for (long m : divisors(ell)) {
    const int mu = mobius(m);
    if (mu != 0) sum += XPoly::monomial(mu, static_cast<int>(ell / m));
  }
  return sum * Rational(1, ell);
}

std::vector<long> f_ell_coefficients(long ell) {
  if (ell < 1) throw std::invalid_argument("f_ell: l must be >= 1");
  std::vector<long> coeffs(static_cast<std::size_t>(ell), 0);
  for (long m : divisors(ell)) coeffs[static_cast<std::size_t>(ell - ell / m)] += mobius(m);
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

USeries f_ell(long ell, int order) {
  const auto coeffs = f_ell_coefficients(ell);
  USeries s(order);
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= order; ++k) {
    if (coeffs[k] != 0) s.set(static_cast<int>(k), XPoly(coeffs[k]));
  }
  return s;
}

USeries factor(long ell, Parity ambient, const USeries& gamma) {
  const int order = gamma.order();
  const XPoly e = necklace(ell);
  const USeries f = f_ell(ell, order);

  USeries composed = USeries::one(order);
  if (ell <= order) {
    const int top = static_cast<int>(order / ell);
    USeries outer(order);
    for (int j = 0; j <= top; ++j) outer.set(j, gamma[j].compose(e));
    const Rational lead = (ambient == Parity::odd) ? Rational(ell) : Rational(-ell);
    const USeries t = USeries::monomial(order, XPoly(lead), static_cast<int>(ell)) * series_pow_poly(f, XPoly(-1));
    composed = series_compose(outer, t);
  }
  return composed * series_pow_poly(f, -e);
}

USeries factor(long ell, Parity ambient, int order) { return factor(ell, ambient, gamma_expansion(order)); }

USeries assemble(Parity ambient, int order) {
  if (order < 0) throw std::invalid_argument("assemble: negative order");
  const USeries gamma = gamma_expansion(order);
  USeries product = USeries::one(order);
  for (long ell = 1; ell <= 2L * order; ++ell) product = product * factor(ell, ambient, gamma);
  for (int j = 0; j <= order; ++j) {
    const XPoly& p = product[j];
    if (!p.has_integer_coefficients() || p.degree() > 2 * j) {
      std::ostringstream os;
      os << "assemble: coefficient of u^" << j << " is not an integer polynomial of degree <= " << 2 * j << ": " << p;
      throw std::logic_error(os.str());
    }
  }
  return product;
}

}  // namespace knothodge
