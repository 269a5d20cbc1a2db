#include <gtest/gtest.h>

#include <random>

#include "knothodge/fixtures.hpp"
#include "knothodge/genfun.hpp"
#include "knothodge/homology.hpp"
#include "knothodge/rational.hpp"

using namespace knothodge;

namespace {

long rank_by_gauss(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m.rows), std::vector<Rational>(static_cast<std::size_t>(m.cols)));
  for (const auto& [rc, value] : m.entries) a[static_cast<std::size_t>(rc.first)][static_cast<std::size_t>(rc.second)] = value;
  long rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = static_cast<int>(rank); r < m.rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    const auto& prow = a[static_cast<std::size_t>(rank)];
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      auto& row = a[static_cast<std::size_t>(r)];
      const Rational f = row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c < m.cols; ++c) row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
    }
    ++rank;
  }
  return rank;
}

std::string describe(const std::vector<HomologyGroup>& groups) {
  std::string out;
  for (const auto& g : groups) {
    if (!out.empty()) out += ' ';
    out += "v" + std::to_string(g.v) + ":" + std::to_string(g.dim) + "@" + g.degree.str();
  }
  return out.empty() ? "none" : out;
}

struct Expectation {
  int i, j;
  Parity p;
  const char* groups;
};

const Expectation low_complexity[] = {
    {2, 1, Parity::odd, "v0:1@d-3"},   {1, 2, Parity::odd, "v2:1@2d-5"},  {2, 2, Parity::odd, "v2:1@2d-6"},
    {1, 3, Parity::odd, "v4:1@3d-8"},  {2, 3, Parity::odd, "v4:1@3d-9"},  {3, 3, Parity::odd, "none"},
    {4, 3, Parity::odd, "none"},       {1, 1, Parity::even, "v1:1@d-3"},  {3, 2, Parity::even, "v1:1@2d-6"},
    {1, 3, Parity::even, "v4:1@3d-8"}, {2, 3, Parity::even, "v4:1@3d-9"}, {3, 3, Parity::even, "none"},
    {4, 3, Parity::even, "none"},
};

}  // namespace

TEST(RankExact, SmallMatrices) {
  EXPECT_EQ(rank_exact(SparseMatrix{3, 4, {}}), 0);
  SparseMatrix id{3, 3, {}};
  for (int k = 0; k < 3; ++k) id.add(k, k, 1);
  EXPECT_EQ(rank_exact(id), 3);
  SparseMatrix dependent{2, 3, {}};
  dependent.add(0, 0, 2);
  dependent.add(0, 2, -4);
  dependent.add(1, 0, -3);
  dependent.add(1, 2, 6);
  EXPECT_EQ(rank_exact(dependent), 1);
}

TEST(RankExact, MatchesRationalGaussOnRandomMatrices) {
  std::mt19937 gen(20261016);
  std::uniform_int_distribution<int> dim(1, 9), entry(-3, 3), density(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    SparseMatrix m{dim(gen), dim(gen), {}};
    for (int r = 0; r < m.rows; ++r) {
      for (int c = 0; c < m.cols; ++c) {
        if (density(gen) == 0) m.add(r, c, entry(gen));
      }
    }
    // duplicate a row now and then so rank deficiency is exercised
    if (m.rows > 1 && trial % 3 == 0) {
      for (int c = 0; c < m.cols; ++c) m.add(m.rows - 1, c, 2 * m.at(0, c) - m.at(m.rows - 1, c));
    }
    EXPECT_EQ(rank_exact(m), rank_by_gauss(m));
  }
}

TEST(SparseMatrix, MultiplyShapes) {
  SparseMatrix a{1, 2, {}}, b{2, 1, {}};
  a.add(0, 0, 1);
  a.add(0, 1, 1);
  b.add(0, 0, 1);
  b.add(1, 0, -1);
  EXPECT_TRUE(multiply(a, b).entries.empty());
  EXPECT_THROW(multiply(a, a), std::invalid_argument);
}

TEST(BuildComplex, Sizes) {
  EXPECT_EQ(build_complex(2, 1, Parity::odd).total_size(), 1u);
  EXPECT_EQ(build_complex(2, 3, Parity::odd).total_size(), 5u);
  EXPECT_EQ(build_complex(1, 3, Parity::odd).total_size(), 9u);
  EXPECT_EQ(build_complex(3, 3, Parity::even, 1, true).total_size(), 0u);
  EXPECT_EQ(build_complex(3, 3, Parity::even).total_size(), 4u);
  EXPECT_EQ(build_complex(2, 1, Parity::even).total_size(), 0u);
}

TEST(Homology, LowComplexity) {
  for (const auto& e : low_complexity) {
    EXPECT_EQ(describe(nonzero_homology(build_complex(e.i, e.j, e.p))), e.groups)
        << "i=" << e.i << " j=" << e.j << " " << to_string(e.p);
  }
}

TEST(Homology, DifferentialSquaresToZero) {
  for (Parity p : {Parity::odd, Parity::even}) {
    for (long k : {1L, 2L}) {
      for (int j = 1; j <= 4; ++j) {
        for (int i = 1; i <= 2 * j; ++i) {
          const DSquaredReport r = verify_d_squared(build_complex(i, j, p, k));
          EXPECT_TRUE(r.ok) << to_string(p) << " k=" << k << " i=" << i << " j=" << j << " v=" << r.v;
        }
      }
    }
  }
}

TEST(Homology, ClearedDifferentialIsDetected) {
  ChainComplexQ c = build_complex(2, 3, Parity::odd);
  const auto expected = describe(nonzero_homology(c));
  for (auto& m : c.differentials) {
    if (!m.entries.empty()) {
      m.entries.clear();
      break;
    }
  }
  EXPECT_NE(describe(nonzero_homology(c)), expected);
}

TEST(Homology, ShiftingExternalDegreeByTwo) {
  for (Parity p : {Parity::odd, Parity::even}) {
    for (int i = 1; i <= 4; ++i) {
      const auto a = homology_dims(build_complex(i, 3, p, 1));
      const auto b = homology_dims(build_complex(i, 3, p, 3));
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t s = 0; s < a.size(); ++s) {
        EXPECT_EQ(a[s].dim, b[s].dim);
        EXPECT_EQ(a[s].degree.d_coeff, b[s].degree.d_coeff);
        EXPECT_EQ(a[s].degree.constant - b[s].degree.constant, 2L * i);
      }
    }
  }
}

TEST(Homology, LoopGraphsSpanAcyclicPiece) {
  for (int j = 2; j <= 4; j += 2) {
    for (int i = 1; i <= 2 * j; ++i) {
      EXPECT_EQ(homology_dims(build_complex(i, j, Parity::even)), homology_dims(build_complex(i, j, Parity::even, 1, true)))
          << "i=" << i << " j=" << j;
    }
  }
}

TEST(Homology, EulerCharacteristicMatchesTable) {
  for (Parity p : {Parity::odd, Parity::even}) {
    const EulerTable expected = homotopy_from_homology(assemble(p, 4), p, 4);
    for (int j = 1; j <= 4; ++j) {
      for (int i = 1; i <= 2 * j; ++i) {
        const long chi = euler_characteristic(homology_dims(build_complex(i, j, p)), p);
        EXPECT_EQ(Integer(chi), expected.at(i, j)) << to_string(p) << " i=" << i << " j=" << j;
      }
    }
  }
}

TEST(Homology, TopDegreeMatchesChordPrimitives) {
  const EulerTable chord = fixture_chord_primitives();
  for (int j = 1; j <= 4; ++j) {
    long top = 0;
    for (const auto& g : homology_dims(build_complex(2, j, Parity::odd))) {
      if (g.degree == DegreeExpr{j, -3L * j}) top += g.dim;
    }
    EXPECT_EQ(Integer(top), chord.at(2, j)) << "j=" << j;
  }
}
