#include "knothodge/gamma.hpp"

#include <stdexcept>

namespace knothodge {

std::vector<XPoly> faulhaber_table(int kmax) {
  if (kmax < 1) throw std::invalid_argument("faulhaber_table: kmax must be >= 1");
  // Both sides of (e^{(x+1)t} - 1)/(e^t - 1) divided by t, as series in t.
  const XPoly x_plus_one{1, 1};
  std::vector<XPoly> numerator(static_cast<std::size_t>(kmax) + 1);
  std::vector<XPoly> denominator(static_cast<std::size_t>(kmax) + 1);
  XPoly power = x_plus_one;
  Rational factorial = 1;
  for (int n = 0; n <= kmax; ++n) {
    factorial *= n + 1;
    numerator[static_cast<std::size_t>(n)] = power * (Rational(1) / factorial);
    denominator[static_cast<std::size_t>(n)] = XPoly(Rational(1) / factorial);
    power *= x_plus_one;
  }
  const USeries quotient = USeries(kmax, std::move(numerator)) *
                           series_pow_poly(USeries(kmax, std::move(denominator)), XPoly(-1));
  std::vector<XPoly> out(static_cast<std::size_t>(kmax) + 1);
  Rational k_factorial = 1;
  for (int k = 1; k <= kmax; ++k) {
    k_factorial *= k;
    out[static_cast<std::size_t>(k)] = quotient[k] * k_factorial;
  }
  return out;
}

XPoly faulhaber(int k) {
  if (k < 1) throw std::invalid_argument("faulhaber: k must be >= 1");
  return faulhaber_table(k)[static_cast<std::size_t>(k)];
}

USeries gamma_expansion(int order) {
  if (order < 0) throw std::invalid_argument("gamma_expansion: negative order");
  if (order == 0) return USeries::one(0);
  const auto sums = faulhaber_table(order);
  USeries log_gamma(order);
  for (int k = 1; k <= order; ++k) log_gamma.set(k, sums[static_cast<std::size_t>(k)] * Rational(1, k));
  return series_exp(log_gamma);
}

USeries gamma_product_at_integer(long n, int order) {
  if (order < 0) throw std::invalid_argument("gamma_product_at_integer: negative order");
  USeries acc = USeries::one(order);
  if (n >= 0) {
    for (long i = 1; i <= n; ++i) {
      USeries geometric(order);
      Rational p = 1;
      for (int m = 0; m <= order; ++m) {
        geometric.set(m, XPoly(p));
        p *= i;
      }
      acc = acc * geometric;
    }
  } else {
    for (long i = 1; i <= -n - 1; ++i) {
      USeries linear = USeries::one(order);
      if (order >= 1) linear.set(1, XPoly(i));
      acc = acc * linear;
    }
  }
  return acc;
}

}  // namespace knothodge
