#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "knothodge/fixtures.hpp"
#include "knothodge/genfun.hpp"
#include "knothodge/graphs.hpp"

using namespace knothodge;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

int permutation_parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b] ? 1 : 0;
  }
  return inv % 2 == 0 ? 1 : -1;
}

/// Every kind-preserving vertex permutation (externals first).
std::vector<std::vector<int>> vertex_permutations(int ext, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(ext)), in(static_cast<std::size_t>(n - ext));
  std::iota(e.begin(), e.end(), 0);
  do {
    std::iota(in.begin(), in.end(), ext);
    do {
      std::vector<int> p = e;
      p.insert(p.end(), in.begin(), in.end());
      out.push_back(std::move(p));
    } while (std::next_permutation(in.begin(), in.end()));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

EdgeList normalized(const EdgeList& edges, const std::vector<int>& perm) {
  EdgeList out;
  for (auto [a, b] : edges) {
    a = perm[static_cast<std::size_t>(a)];
    b = perm[static_cast<std::size_t>(b)];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool admissible(int ext, int n, const EdgeList& edges) {
  std::vector<int> val(static_cast<std::size_t>(n), 0), parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[static_cast<std::size_t>(a)] == a ? a : find(parent[static_cast<std::size_t>(a)]); };
  int comps = n;
  for (auto [a, b] : edges) {
    ++val[static_cast<std::size_t>(a)];
    ++val[static_cast<std::size_t>(b)];
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --comps;
    }
  }
  if (comps != 1) return false;
  for (int v = 0; v < n; ++v) {
    if (v < ext ? val[static_cast<std::size_t>(v)] != 1 : val[static_cast<std::size_t>(v)] < 3) return false;
  }
  return true;
}

/// Isomorphism classes by exhaustive search over edge multisets.
std::vector<EdgeList> brute_force_classes(int ext, int internals, int complexity) {
  const int n = ext + internals;
  const int e = internals + complexity;
  EdgeList types;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      if (a < ext && b < ext && !(ext == 2 && internals == 0)) continue;
      if (a < ext && a == b) continue;
      types.emplace_back(a, b);
    }
  }
  const auto perms = vertex_permutations(ext, n);
  std::set<EdgeList> classes;
  EdgeList current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      if (!admissible(ext, n, current)) return;
      EdgeList best;
      for (const auto& p : perms) {
        EdgeList c = normalized(current, p);
        if (best.empty() || c < best) best = std::move(c);
      }
      classes.insert(best);
      return;
    }
    for (std::size_t t = from; t < types.size(); ++t) {
      current.push_back(types[t]);
      rec(t, left - 1);
      current.pop_back();
    }
  };
  rec(0, e);
  return {classes.begin(), classes.end()};
}

/// Zero test straight from the definition: some automorphism (vertex map plus
/// edge bijection plus loop flips) acts on the orientation with sign -1.
bool brute_force_zero(int ext, int n, const EdgeList& edges, Parity d, Parity k) {
  const bool odd_d = d == Parity::odd;
  for (auto [a, b] : edges) {
    if (a == b && odd_d) return true;  // flipping the loop alone
  }
  const auto perms = vertex_permutations(ext, n);
  std::vector<int> beta(edges.size());
  for (const auto& p : perms) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    if (normalized(edges, p) != normalized(edges, id)) continue;
    std::iota(beta.begin(), beta.end(), 0);
    do {
      int sign = 1;
      bool ok = true;
      int reversed = 0;
      for (std::size_t s = 0; s < edges.size() && ok; ++s) {
        const auto [a, b] = edges[s];
        const auto [c, dd] = edges[static_cast<std::size_t>(beta[s])];
        const int pa = p[static_cast<std::size_t>(a)], pb = p[static_cast<std::size_t>(b)];
        if (pa == c && pb == dd) continue;
        if (pa == dd && pb == c) {
          ++reversed;
          continue;
        }
        ok = false;
      }
      if (!ok) continue;
      if (k == Parity::odd) sign *= permutation_parity(std::vector<int>(p.begin(), p.begin() + ext));
      if (odd_d) {
        sign *= permutation_parity(std::vector<int>(p.begin() + ext, p.end()));
        if (reversed % 2 == 1) sign = -sign;
      } else {
        sign *= permutation_parity(beta);
      }
      if (sign < 0) return true;
    } while (std::next_permutation(beta.begin(), beta.end()));
  }
  return false;
}

/// Half-edge level symmetries: vertex maps times edge bijections times loop flips.
std::uint64_t brute_force_automorphisms(int ext, int n, const EdgeList& edges) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  const EdgeList base = normalized(edges, id);
  std::uint64_t count = 0;
  std::vector<int> beta(edges.size());
  for (const auto& p : vertex_permutations(ext, n)) {
    if (normalized(edges, p) != base) continue;
    std::iota(beta.begin(), beta.end(), 0);
    do {
      std::uint64_t ways = 1;
      for (std::size_t s = 0; s < edges.size() && ways; ++s) {
        const auto [a, b] = edges[s];
        const auto [c, dd] = edges[static_cast<std::size_t>(beta[s])];
        const int pa = p[static_cast<std::size_t>(a)], pb = p[static_cast<std::size_t>(b)];
        if (std::minmax(pa, pb) != std::minmax(c, dd)) ways = 0;
        else if (a == b) ways *= 2;
      }
      count += ways;
    } while (std::next_permutation(beta.begin(), beta.end()));
  }
  return count;
}

EdgeList edge_list(const HalfEdgeGraph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.tail, e.head);
  return out;
}

HalfEdgeGraph from_list(int ext, int internals, const EdgeList& edges) {
  std::vector<Edge> out;
  for (auto [a, b] : edges) out.push_back({a, b});
  return HalfEdgeGraph(ext, internals, std::move(out));
}

std::size_t total_classes(int i, int j, Parity d) {
  std::size_t n = 0;
  for (int v = 0; v <= 2 * j - i; ++v) n += enumerate(i, j, v, d).size();
  return n;
}

struct Cell {
  int i, j, v;
};

const Cell small_cells[] = {{2, 1, 0}, {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3}, {2, 2, 1}, {2, 2, 2},
                            {3, 2, 1}, {4, 2, 0}, {1, 3, 1}, {1, 3, 2}, {1, 3, 3}, {2, 3, 1}, {2, 3, 2},
                            {2, 3, 3}, {3, 3, 1}, {3, 3, 2}, {3, 3, 3}, {4, 3, 1}, {4, 3, 2}, {5, 3, 1}};

}  // namespace

TEST(HalfEdgeGraph, TextRoundTrip) {
  const HalfEdgeGraph g = HalfEdgeGraph::parse("i=2 v=2 | 0>2 1>3 2>3 2>3");
  EXPECT_EQ(g.str(), "i=2 v=2 | 0>2 1>3 2>3 2>3");
  EXPECT_EQ(g.complexity(), 2);
  EXPECT_TRUE(g.is_admissible());
  EXPECT_THROW(HalfEdgeGraph::parse("i=2 | 0>1"), std::invalid_argument);
  EXPECT_THROW(HalfEdgeGraph::parse("i=2 v=0 | 0>5"), std::invalid_argument);
  EXPECT_THROW(HalfEdgeGraph::parse("i=2 v=0 | 0-1"), std::invalid_argument);
}

TEST(Enumerate, SingleEdge) {
  const auto odd = enumerate(2, 1, 0, Parity::odd);
  ASSERT_EQ(odd.size(), 1u);
  EXPECT_EQ(odd[0].graph.str(), "i=2 v=0 | 0>1");
  EXPECT_TRUE(enumerate(2, 1, 0, Parity::even).empty());
}

TEST(Enumerate, LowComplexityTotals) {
  EXPECT_EQ(reduced_classes(2, 1, Parity::odd).size(), 1u);
  EXPECT_EQ(reduced_classes(2, 3, Parity::odd).size(), 5u);
  EXPECT_EQ(reduced_classes(1, 3, Parity::odd).size(), 9u);
  EXPECT_EQ(reduced_classes(3, 3, Parity::odd).size(), 0u);
  EXPECT_EQ(reduced_classes(4, 3, Parity::odd).size(), 0u);
  EXPECT_EQ(reduced_classes(1, 1, Parity::even).size(), 1u);
  // even d: loop graphs are dropped from complexity 2 on
  EXPECT_EQ(reduced_classes(3, 2, Parity::even).size(), 1u);
  EXPECT_EQ(reduced_classes(1, 2, Parity::even).size(), 0u);
  EXPECT_EQ(reduced_classes(4, 3, Parity::even).size(), 2u);
  EXPECT_EQ(reduced_classes(3, 3, Parity::even).size(), 0u);
  EXPECT_EQ(reduced_classes(2, 3, Parity::even).size(), 1u);
  EXPECT_EQ(reduced_classes(1, 3, Parity::even).size(), 1u);
}

TEST(Enumerate, ReducedOnlyDropsLoops) {
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(reduced_classes(i, 3, Parity::odd).size(), total_classes(i, 3, Parity::odd));
    std::size_t loopless = 0;
    for (int v = 0; v <= 6 - i; ++v) {
      for (const auto& c : enumerate(i, 3, v, Parity::even)) loopless += has_loop(c.graph) ? 0 : 1;
    }
    EXPECT_EQ(reduced_classes(i, 3, Parity::even).size(), loopless);
  }
  EXPECT_EQ(total_classes(3, 3, Parity::even), 4u);
}

TEST(Enumerate, BoundsChecked) {
  EXPECT_THROW(enumerate(0, 1, 0, Parity::odd), std::out_of_range);
  EXPECT_THROW(enumerate(3, 1, 0, Parity::odd), std::out_of_range);
  EXPECT_THROW(enumerate(2, 2, 3, Parity::odd), std::out_of_range);
  EXPECT_THROW(enumerate(1, 0, 0, Parity::odd), std::out_of_range);
}

TEST(Enumerate, MatchesBruteForceIsomorphismClasses) {
  for (const auto& c : small_cells) {
    const auto expected = brute_force_classes(c.i, c.v, c.j);
    EXPECT_EQ(enumerate_all(c.i, c.j, c.v).size(), expected.size()) << "i=" << c.i << " j=" << c.j << " v=" << c.v;
  }
}

TEST(Enumerate, MatchesBruteForceZeroTest) {
  for (const auto& c : small_cells) {
    for (Parity d : {Parity::odd, Parity::even}) {
      for (Parity k : {Parity::odd, Parity::even}) {
        std::size_t nonzero = 0;
        for (const auto& g : brute_force_classes(c.i, c.v, c.j)) nonzero += brute_force_zero(c.i, c.i + c.v, g, d, k) ? 0 : 1;
        EXPECT_EQ(enumerate(c.i, c.j, c.v, d, k).size(), nonzero)
            << "i=" << c.i << " j=" << c.j << " v=" << c.v << " d=" << to_string(d) << " k=" << to_string(k);
      }
    }
  }
}

TEST(Canonical, AlreadyCanonicalHasSignOne) {
  for (const auto& c : enumerate(1, 3, 4, Parity::odd)) {
    const auto [again, sign] = canonical(c.graph, {Parity::odd, Parity::odd});
    EXPECT_EQ(sign, 1);
    EXPECT_EQ(again, c);
  }
}

TEST(Canonical, SwappedAndReversedSingleEdge) {
  const HalfEdgeGraph g = HalfEdgeGraph::parse("i=2 v=0 | 0>1");
  const std::vector<int> swap = {1, 0};
  EXPECT_EQ(orientation_sign(g, swap, {Parity::odd, Parity::odd}), 1);
  EXPECT_EQ(orientation_sign(g, swap, {Parity::even, Parity::odd}), -1);
}

TEST(Canonical, TransposedDoubleEdge) {
  // moving one parallel copy past another edge is a transposition
  const HalfEdgeGraph g = HalfEdgeGraph::parse("i=2 v=2 | 0>2 1>3 2>3 2>3");
  const HalfEdgeGraph h = HalfEdgeGraph::parse("i=2 v=2 | 0>2 2>3 1>3 2>3");
  const std::vector<int> id = {0, 1, 2, 3};
  EXPECT_EQ(orientation_sign(g, id, {Parity::even, Parity::odd}), 1);
  EXPECT_EQ(orientation_sign(h, id, {Parity::even, Parity::odd}), -1);
  EXPECT_EQ(orientation_sign(h, id, {Parity::odd, Parity::odd}), 1);
  EXPECT_TRUE(canonical(g, {Parity::even, Parity::odd}).first.zero);
  EXPECT_FALSE(canonical(g, {Parity::odd, Parity::odd}).first.zero);
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 gen(424242);
  for (Parity d : {Parity::odd, Parity::even}) {
    for (Parity k : {Parity::odd, Parity::even}) {
      const Grading grading{d, k};
      for (int i = 1; i <= 3; ++i) {
        for (int v = 0; v <= 6 - i; ++v) {
          for (const auto& c : enumerate(i, 3, v, d, k)) {
            const int n = c.graph.vertex_count();
            for (int trial = 0; trial < 4; ++trial) {
              std::vector<int> ext(static_cast<std::size_t>(i)), in(static_cast<std::size_t>(n - i));
              std::iota(ext.begin(), ext.end(), 0);
              std::iota(in.begin(), in.end(), i);
              std::shuffle(ext.begin(), ext.end(), gen);
              std::shuffle(in.begin(), in.end(), gen);
              std::vector<int> p = ext;
              p.insert(p.end(), in.begin(), in.end());
              std::vector<int> order(c.graph.edges().size());
              std::iota(order.begin(), order.end(), 0);
              std::shuffle(order.begin(), order.end(), gen);
              std::vector<Edge> edges;
              int reversed = 0;
              for (int idx : order) {
                const Edge e = c.graph.edges()[static_cast<std::size_t>(idx)];
                Edge mapped{p[static_cast<std::size_t>(e.tail)], p[static_cast<std::size_t>(e.head)]};
                if (gen() % 2) {
                  std::swap(mapped.tail, mapped.head);
                  ++reversed;
                }
                edges.push_back(mapped);
              }
              const HalfEdgeGraph shuffled(i, n - i, edges);
              // Koszul sign of shuffled relative to the canonical orientation
              int expected = 1;
              if (k == Parity::odd) expected *= permutation_parity(ext);
              if (d == Parity::odd) {
                expected *= permutation_parity(in);
                if (reversed % 2) expected = -expected;
              } else {
                expected *= permutation_parity(order);
              }
              const auto [again, sign] = canonical(shuffled, grading);
              EXPECT_EQ(again, c);
              EXPECT_EQ(sign, expected) << c.graph.str();
            }
          }
        }
      }
    }
  }
}

TEST(AutomorphismOrder, SingleEdge) { EXPECT_EQ(automorphism_order(HalfEdgeGraph::parse("i=2 v=0 | 0>1")), 2u); }

TEST(AutomorphismOrder, ComplexityThreeGraphs) {
  const auto fixtures = fixture_symmetry_graphs();
  ASSERT_EQ(fixtures.size(), 3u);
  const auto classes = enumerate(2, 3, 4, Parity::odd);
  for (const auto& f : fixtures) {
    EXPECT_EQ(automorphism_order(f.graph), f.order) << f.graph.str();
    const auto [c, sign] = canonical(f.graph, {Parity::odd, Parity::odd});
    EXPECT_FALSE(c.zero);
    EXPECT_TRUE(std::find(classes.begin(), classes.end(), c) != classes.end());
  }
  EXPECT_EQ(classes.size(), 3u);
}

TEST(AutomorphismOrder, MatchesBruteForce) {
  for (const auto& c : small_cells) {
    for (const auto& g : enumerate_all(c.i, c.j, c.v)) {
      EXPECT_EQ(automorphism_order(g), brute_force_automorphisms(c.i, g.vertex_count(), edge_list(g))) << g.str();
    }
  }
  const HalfEdgeGraph loops = from_list(1, 1, {{0, 1}, {1, 1}, {1, 1}});
  EXPECT_EQ(automorphism_order(loops), 8u);
}

TEST(Differential, NoInternalVertices) {
  const auto c = enumerate(2, 1, 0, Parity::odd).front();
  EXPECT_TRUE(differential(c, {Parity::odd, Parity::odd}).empty());
}

TEST(Differential, ExpansionsKeepValence) {
  for (const auto& g : enumerate_all(1, 3, 1)) {
    for (const auto& h : expansions(g)) {
      EXPECT_TRUE(h.is_admissible());
      EXPECT_EQ(h.complexity(), g.complexity());
      EXPECT_EQ(h.internals(), g.internals() + 1);
    }
  }
}

TEST(Degree, LowComplexityFormulas) {
  EXPECT_EQ(graph_degree(2, 1, 0, 1).str(), "d-3");
  EXPECT_EQ(graph_degree(2, 2, 2, 1).str(), "2d-6");
  EXPECT_EQ(graph_degree(1, 2, 2, 1).str(), "2d-5");
  EXPECT_EQ(graph_degree(2, 3, 4, 1).str(), "3d-9");
  EXPECT_EQ(graph_degree(1, 3, 4, 1).str(), "3d-8");
  EXPECT_EQ(graph_degree(3, 2, 1, 1).str(), "2d-6");
  EXPECT_EQ(graph_degree(1, 1, 1, 1).str(), "d-3");
  EXPECT_EQ(graph_degree(2, 1, 0, 2).at(5), 0);
}

TEST(EulerTable, MatchesGeneratingFunction) {
  for (Parity p : {Parity::odd, Parity::even}) {
    EXPECT_EQ(euler_table(p, 4), homotopy_from_homology(assemble(p, 4), p, 4)) << to_string(p);
  }
}

TEST(EulerTable, KnownCells) {
  EXPECT_EQ(euler_table(Parity::odd, 1).at(2, 1), 1);
  EXPECT_EQ(euler_table(Parity::even, 1).at(1, 1), -1);
}
