#include <gtest/gtest.h>

#include "knothodge/cycleindex.hpp"
#include "knothodge/gamma.hpp"
#include "knothodge/genfun.hpp"

using namespace knothodge;

namespace {

const XPoly x = XPoly::x();

/// p(n) by the recurrence over parts of size at most m.
long partition_count(int n, int m) {
  if (n == 0) return 1;
  if (m == 0) return 0;
  return partition_count(n, m - 1) + (n >= m ? partition_count(n - m, m) : 0);
}

CycleIndexSeries weight_zero_only(const USeries& c) {
  CycleIndexSeries s;
  s.max_weight = 6;
  s.order = c.order();
  s.coefficients.emplace(Partition(), c);
  return s;
}

}  // namespace

TEST(Partition, EnumerationCounts) {
  for (int n = 0; n <= 12; ++n) {
    long expected = 0;
    for (int w = 0; w <= n; ++w) expected += partition_count(w, w);
    EXPECT_EQ(static_cast<long>(partitions_up_to(n).size()), expected) << n;
  }
}

TEST(Partition, ClassEquation) {
  // sum over partitions of n of 1 / z_lambda is 1
  for (int n = 0; n <= 10; ++n) {
    Rational sum = 0;
    for (const auto& p : partitions_up_to(n)) {
      if (p.weight() == n) sum += Rational(1) / Rational(p.centralizer_order());
    }
    EXPECT_EQ(sum, 1) << n;
  }
}

TEST(Partition, MergeAndFormat) {
  const Partition p({{2, 1}, {1, 1}, {2, 0}});
  EXPECT_EQ(p.str(), "{1:1,2:1}");
  EXPECT_EQ((p * Partition({{1, 2}})).str(), "{1:3,2:1}");
  EXPECT_EQ(p.weight(), 3);
  EXPECT_EQ(Partition().str(), "{}");
}

TEST(HodgeCycleIndex, Examples) {
  const CycleIndexSeries h = hodge_cycle_index(4);
  EXPECT_EQ(h.coefficient(Partition())[0], XPoly(1));
  EXPECT_EQ(h.coefficient(Partition({{1, 1}}))[0], x);
  EXPECT_EQ(h.coefficient(Partition({{2, 1}}))[0], (x - x * x) * Rational(1, 2));
}

TEST(HodgeCycleIndex, RegularRepresentationAtOne) {
  // at x = 1 the idempotents sum to the regular representation: sum_n a_1^n
  const CycleIndexSeries h = hodge_cycle_index(8);
  for (const auto& p : partitions_up_to(8)) {
    const Rational value = h.coefficient(p)[0].evaluate(1);
    const bool only_fixed_points = p.parts().size() <= 1 && (p.parts().empty() || p.parts()[0].first == 1);
    EXPECT_EQ(value, only_fixed_points ? 1 : 0) << p.str();
  }
}

TEST(ConfCycleIndex, Examples) {
  const CycleIndexSeries c = conf_cycle_index(Parity::odd, 4, 3);
  EXPECT_EQ(c.coefficient(Partition()), USeries::one(3));
  EXPECT_EQ(c.coefficient(Partition({{1, 1}}))[0], XPoly());
}

TEST(ConfCycleIndex, NormalizationIsTrivialFactor) {
  for (Parity p : {Parity::odd, Parity::even}) {
    const CycleIndexSeries raw = conf_cycle_index(p, 6, 3, false);
    const CycleIndexSeries product = conf_cycle_index(p, 6, 3) * trivial_cycle_index(6, 3);
    EXPECT_EQ(raw.coefficients, product.coefficients);
  }
}

TEST(Pair, WeightZeroOnly) {
  const USeries a = USeries(2, {2, x});
  const USeries b = USeries(2, {3, 1});
  EXPECT_EQ(pair(weight_zero_only(a), weight_zero_only(b)), a * b);
}

TEST(Pair, FirstComplexity) {
  const USeries r = pair(hodge_cycle_index(2), conf_cycle_index(Parity::odd, 2, 1));
  EXPECT_EQ(r[1], x * x);
}

TEST(Pair, ReproducesGeneratingFunction) {
  const CycleIndexSeries h = hodge_cycle_index(8);
  for (Parity p : {Parity::odd, Parity::even}) {
    EXPECT_EQ(pair(h, conf_cycle_index(p, 8, 4)), assemble(p, 4)) << to_string(p);
  }
}

TEST(Pair, PlainSignDisagrees) {
  const USeries plain = pair(hodge_cycle_index(4), conf_cycle_index(Parity::odd, 4, 2), PairingSign::plain);
  EXPECT_NE(plain[2], assemble(Parity::odd, 2)[2]);
}

TEST(FactorOperator, FirstFactorIsGamma) { EXPECT_EQ(factor_operator(1, Parity::odd, 7), gamma_expansion(7)); }

TEST(FactorOperator, IntegerSpecialization) {
  EXPECT_EQ(specialize(factor_operator(1, Parity::odd, 4), -3), USeries(4, {1, 3, 2}));
}

TEST(FactorOperator, MatchesFactorPerEll) {
  const int order = 6;
  const USeries gamma = gamma_expansion(order);
  for (Parity p : {Parity::odd, Parity::even}) {
    for (long ell = 1; ell <= 2 * order; ++ell) {
      EXPECT_EQ(factor_operator(ell, p, order), factor(ell, p, gamma)) << to_string(p) << " l=" << ell;
    }
  }
}
