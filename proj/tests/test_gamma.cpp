#include <gtest/gtest.h>

#include "knothodge/gamma.hpp"

using namespace knothodge;

namespace {

const XPoly x = XPoly::x();

/// Lagrange interpolation through (n, values[n]) for n = 0 .. size-1.
XPoly interpolate(const std::vector<Rational>& values) {
  XPoly result;
  const int n = static_cast<int>(values.size());
  for (int a = 0; a < n; ++a) {
    XPoly basis(1);
    Rational denom = 1;
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      basis *= x - XPoly(b);
      denom *= a - b;
    }
    result += basis * (values[static_cast<std::size_t>(a)] / denom);
  }
  return result;
}

Rational power_sum(int k, int n) {
  Integer s = 0;
  for (int i = 1; i <= n; ++i) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(k));
    s += p;
  }
  return Rational(s);
}

}  // namespace

TEST(Faulhaber, SmallCases) {
  EXPECT_EQ(faulhaber(1), x * (x + XPoly(1)) * Rational(1, 2));
  EXPECT_EQ(faulhaber(2), x * (x + XPoly(1)) * (XPoly(2) * x + XPoly(1)) * Rational(1, 6));
  EXPECT_EQ(faulhaber(3).evaluate(3), Rational(36));
  EXPECT_THROW(faulhaber(0), std::invalid_argument);
}

TEST(Faulhaber, MatchesDirectSummation) {
  for (int k = 1; k <= 12; ++k) {
    const XPoly s = faulhaber(k);
    EXPECT_EQ(s.degree(), k + 1);
    for (int n = 0; n <= 15; ++n) EXPECT_EQ(s.evaluate(n), power_sum(k, n)) << "k=" << k << " n=" << n;
    std::vector<Rational> samples;
    for (int n = 0; n <= k + 1; ++n) samples.push_back(power_sum(k, n));
    EXPECT_EQ(s, interpolate(samples)) << "k=" << k;
  }
}

TEST(GammaExpansion, LowCoefficients) {
  const USeries g = gamma_expansion(4);
  EXPECT_EQ(g[0], XPoly(1));
  EXPECT_EQ(g[1], (x * x + x) * Rational(1, 2));
  EXPECT_EQ(g[2].evaluate(2), Rational(7));
}

TEST(GammaExpansion, InterpolatesIntegerProducts) {
  // gamma_j(n) from the finite product 1/((1-u)...(1-nu)), interpolated at 2j+1 points.
  const int order = 6;
  const USeries g = gamma_expansion(order);
  std::vector<USeries> products;
  for (int n = 0; n <= 2 * order; ++n) products.push_back(gamma_product_at_integer(n, order));
  for (int j = 0; j <= order; ++j) {
    std::vector<Rational> samples;
    for (int n = 0; n <= 2 * j; ++n) samples.push_back(products[static_cast<std::size_t>(n)][j].coefficient(0));
    EXPECT_EQ(g[j], interpolate(samples)) << "j=" << j;
  }
}

TEST(GammaProduct, Examples) {
  EXPECT_EQ(gamma_product_at_integer(0, 3), USeries::one(3));
  EXPECT_EQ(gamma_product_at_integer(2, 3), USeries(3, {1, 3, 7, 15}));
  EXPECT_EQ(gamma_product_at_integer(-3, 4), USeries(4, {1, 3, 2}));
  EXPECT_EQ(gamma_product_at_integer(-1, 4), USeries::one(4));
}

TEST(GammaProperties, SpecializationAtIntegers) {
  const int order = 20;
  const USeries g = gamma_expansion(order);
  for (long n = -8; n <= 8; ++n) EXPECT_EQ(specialize(g, n), gamma_product_at_integer(n, order)) << "n=" << n;
}

TEST(GammaProperties, ReflectedPolynomial) {
  // gamma_j(-m) = sum over strictly increasing i_1 < ... < i_j < m of products.
  const int order = 5;
  const USeries g = gamma_expansion(order);
  for (int m = 1; m <= 7; ++m) {
    std::vector<Integer> e(static_cast<std::size_t>(order) + 1, 0);
    e[0] = 1;
    for (int i = 1; i < m; ++i) {
      for (int j = order; j >= 1; --j) e[static_cast<std::size_t>(j)] += i * e[static_cast<std::size_t>(j - 1)];
    }
    for (int j = 0; j <= order; ++j) EXPECT_EQ(g[j].evaluate(-m), Rational(e[static_cast<std::size_t>(j)]));
  }
}

TEST(GammaProperties, DegreeAndLeadingCoefficient) {
  const USeries g = gamma_expansion(10);
  for (int j = 1; j <= 10; ++j) {
    EXPECT_EQ(g[j].degree(), 2 * j);
    EXPECT_GT(g[j].coefficient(2 * j), 0);
  }
}
