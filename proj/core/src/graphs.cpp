#include "knothodge/graphs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace knothodge {

std::string DegreeExpr::str() const {
  std::ostringstream os;
  if (d_coeff != 0) {
    if (d_coeff == -1) {
      os << '-';
    } else if (d_coeff != 1) {
      os << d_coeff;
    }
    os << 'd';
    if (constant > 0) os << '+' << constant;
    if (constant < 0) os << constant;
  } else {
    os << constant;
  }
  return os.str();
}

DegreeExpr graph_degree(int i, int j, int v, long k) { return {j, -j - k * i - v}; }

bool operator<(const GraphClass& a, const GraphClass& b) {
  return std::tie(a.i, a.j, a.v, a.graph.edges(), a.zero) < std::tie(b.i, b.j, b.v, b.graph.edges(), b.zero);
}

std::pair<GraphClass, int> canonical(const HalfEdgeGraph& g, Grading grading) {
  const CanonicalForm form = canonical_form(g);
  GraphClass c;
  c.zero = vanishes(form, grading);
  c.i = g.externals();
  c.j = g.complexity();
  c.v = g.internals();
  c.graph = form.graph;
  return {std::move(c), orientation_sign(g, form.position, grading)};
}

std::vector<HalfEdgeGraph> expansions(const HalfEdgeGraph& g) {
  std::vector<HalfEdgeGraph> out;
  const int fresh = g.vertex_count();
  for (int w = g.externals(); w < fresh; ++w) {
    // half-edges at w as (edge index, is head end)
    std::vector<std::pair<int, bool>> half;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.edges()[static_cast<std::size_t>(e)].tail == w) half.emplace_back(e, false);
      if (g.edges()[static_cast<std::size_t>(e)].head == w) half.emplace_back(e, true);
    }
    const int m = static_cast<int>(half.size());
    if (m < 4) continue;
    // subsets of half[1..m-1] that move to the new vertex
    for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
      const int moved = __builtin_popcount(mask);
      if (moved < 2 || m - moved < 2) continue;
      std::vector<Edge> edges = g.edges();
      for (int b = 0; b < m - 1; ++b) {
        if (!(mask & (1u << b))) continue;
        const auto [e, head] = half[static_cast<std::size_t>(b + 1)];
        (head ? edges[static_cast<std::size_t>(e)].head : edges[static_cast<std::size_t>(e)].tail) = fresh;
      }
      edges.push_back({w, fresh});
      out.emplace_back(g.externals(), g.internals() + 1, std::move(edges));
    }
  }
  return out;
}

void check_bounds(int i, int j, int v) {
  if (j < 1 || i < 1 || i > 2 * j || v < 0 || v > 2 * j - i) {
    std::ostringstream os;
    os << "graph parameters out of bounds: i=" << i << " j=" << j << " v=" << v
       << " (need 1 <= i <= 2j and 0 <= v <= 2j - i)";
    throw std::out_of_range(os.str());
  }
}

namespace {

using Level = std::vector<HalfEdgeGraph>;

/// Canonical graphs per v for one (i, j), grown by expansion: every graph
/// with v >= 2 internals contracts along an internal edge to one with v - 1.
std::vector<Level> grow(int i, int j) {
  std::vector<Level> levels(static_cast<std::size_t>(2 * j - i + 1));
  if (i == 2 && j == 1) levels[0].push_back(HalfEdgeGraph(2, 0, {{0, 1}}));
  const int loops = j - i + 1;
  if (loops >= 0 && i + 2 * loops >= 3 && levels.size() > 1) {
    std::vector<Edge> edges;
    for (int e = 0; e < i; ++e) edges.push_back({e, i});
    for (int l = 0; l < loops; ++l) edges.push_back({i, i});
    levels[1].push_back(canonical_form(HalfEdgeGraph(i, 1, std::move(edges))).graph);
  }
  for (std::size_t v = 1; v + 1 < levels.size(); ++v) {
    std::map<std::vector<Edge>, HalfEdgeGraph> seen;
    for (const auto& g : levels[v]) {
      for (const auto& h : expansions(g)) {
        auto c = canonical_form(h).graph;
        seen.try_emplace(c.edges(), std::move(c));
      }
    }
    for (auto& [key, g] : seen) levels[v + 1].push_back(std::move(g));
  }
  return levels;
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::vector<Level>> cache;

}  // namespace

const std::vector<HalfEdgeGraph>& enumerate_all(int i, int j, int v) {
  check_bounds(i, j, v);
  std::lock_guard lock(cache_mutex);
  auto it = cache.find({i, j});
  if (it == cache.end()) it = cache.emplace(std::pair{i, j}, grow(i, j)).first;
  return it->second[static_cast<std::size_t>(v)];
}

std::vector<GraphClass> enumerate(int i, int j, int v, Parity ambient, Parity external) {
  const Grading grading{ambient, external};
  std::vector<GraphClass> out;
  for (const auto& g : enumerate_all(i, j, v)) {
    auto [c, sign] = canonical(g, grading);
    if (!c.zero) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_loop(const HalfEdgeGraph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.tail == e.head; });
}

std::vector<GraphClass> reduced_classes(int i, int j, Parity ambient, Parity external) {
  check_bounds(i, j, 0);
  std::vector<GraphClass> out;
  for (int v = 0; v <= 2 * j - i; ++v) {
    for (auto& c : enumerate(i, j, v, ambient, external)) {
      if (!(loops_dropped(j, ambient) && has_loop(c.graph))) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<std::pair<GraphClass, long>> differential(const GraphClass& c, Grading grading) {
  std::vector<std::pair<GraphClass, long>> out;
  if (c.zero) return out;
  std::map<GraphClass, long> sum;
  for (const auto& h : expansions(c.graph)) {
    auto [target, sign] = canonical(h, grading);
    if (!target.zero) sum[std::move(target)] += sign;
  }
  for (auto& [target, coeff] : sum) {
    if (coeff != 0) out.emplace_back(target, coeff);
  }
  return out;
}

std::uint64_t automorphism_order(const HalfEdgeGraph& g) { return automorphism_order(canonical_form(g)); }

EulerTable euler_table(Parity ambient, int jmax, Parity external) {
  const long d = representative_dimension(ambient);
  const long k = representative_external_degree(external);
  EulerTable table(TableKind::homotopy, ambient, jmax);
  for (int j = 1; j <= jmax; ++j) {
    for (int i = 1; i <= 2 * j; ++i) {
      Integer chi = 0;
      for (int v = 0; v <= 2 * j - i; ++v) {
        const long count = static_cast<long>(enumerate(i, j, v, ambient, external).size());
        chi += (graph_degree(i, j, v, k).at(d) % 2 == 0) ? count : -count;
      }
      table.set(i, j, chi);
    }
  }
  return table;
}

}  // namespace knothodge
