#include "knothodge/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace knothodge {

namespace {

/// Sign of the ordering of `seq` by counting inversions.
int permutation_sign(std::span<const int> seq) {
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] > seq[b]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

class Labeler {
 public:
  explicit Labeler(const HalfEdgeGraph& g) : g_(g), n_(g.vertex_count()), mult_(static_cast<std::size_t>(n_ * n_), 0) {
    for (const auto& e : g.edges()) {
      ++mult_[index(e.tail, e.head)];
      if (e.tail != e.head) ++mult_[index(e.head, e.tail)];
    }
  }

  CanonicalForm run() {
    const auto val = g_.valences();
    std::vector<std::array<int, 3>> keys(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      keys[static_cast<std::size_t>(v)] = {g_.is_external(v) ? 0 : 1, val[static_cast<std::size_t>(v)], mult_[index(v, v)]};
    }
    std::vector<int> colors = rank(keys);
    search(std::move(colors));

    CanonicalForm form;
    form.graph = relabel(g_, best_leaves_.front());
    form.position = best_leaves_.front();
    std::vector<int> inverse(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(form.position[static_cast<std::size_t>(v)])] = v;
    for (const auto& leaf : best_leaves_) {
      std::vector<int> aut(static_cast<std::size_t>(n_));
      for (int p = 0; p < n_; ++p) aut[static_cast<std::size_t>(p)] = leaf[static_cast<std::size_t>(inverse[static_cast<std::size_t>(p)])];
      form.automorphisms.push_back(std::move(aut));
    }
    std::sort(form.automorphisms.begin(), form.automorphisms.end());
    return form;
  }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a * n_ + b); }

  template <typename Key>
  static std::vector<int> rank(const std::vector<Key>& keys) {
    std::vector<int> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)]; });
    std::vector<int> colors(keys.size());
    int current = -1;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k == 0 || keys[static_cast<std::size_t>(order[k - 1])] != keys[static_cast<std::size_t>(order[k])]) ++current;
      colors[static_cast<std::size_t>(order[k])] = current;
    }
    return colors;
  }

  static int color_count(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  /// Iterated colour refinement to the coarsest equitable partition.
  std::vector<int> refine(std::vector<int> colors) const {
    colors = rank(colors);
    int count = color_count(colors);
    std::vector<std::vector<int>> sigs(static_cast<std::size_t>(n_));
    while (count < n_) {
      for (int v = 0; v < n_; ++v) {
        auto& sig = sigs[static_cast<std::size_t>(v)];
        sig.clear();
        std::vector<std::pair<int, int>> around;
        for (int w = 0; w < n_; ++w) {
          const int m = mult_[index(v, w)];
          if (w != v && m > 0) around.emplace_back(colors[static_cast<std::size_t>(w)], m);
        }
        std::sort(around.begin(), around.end());
        sig.push_back(colors[static_cast<std::size_t>(v)]);
        for (const auto& [c, m] : around) {
          sig.push_back(c);
          sig.push_back(m);
        }
      }
      auto next = rank(sigs);
      const int next_count = color_count(next);
      colors = std::move(next);
      if (next_count == count) break;
      count = next_count;
    }
    return colors;
  }

  void search(std::vector<int> colors) {
    colors = refine(std::move(colors));
    if (color_count(colors) == n_) {
      leaf(colors);
      return;
    }
    std::vector<int> sizes(static_cast<std::size_t>(n_), 0);
    for (int c : colors) ++sizes[static_cast<std::size_t>(c)];
    int target = 0;
    while (sizes[static_cast<std::size_t>(target)] < 2) ++target;
    for (int v = 0; v < n_; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      std::vector<int> split(static_cast<std::size_t>(n_));
      for (int w = 0; w < n_; ++w) {
        const int c = colors[static_cast<std::size_t>(w)];
        split[static_cast<std::size_t>(w)] = 2 * c + ((c == target && w != v) ? 1 : 0);
      }
      search(std::move(split));
    }
  }

  void leaf(const std::vector<int>& position) {
    std::vector<Edge> code;
    code.reserve(g_.edges().size());
    for (const auto& e : g_.edges()) {
      const int a = position[static_cast<std::size_t>(e.tail)];
      const int b = position[static_cast<std::size_t>(e.head)];
      code.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(code.begin(), code.end());
    if (best_leaves_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_leaves_.clear();
      best_leaves_.push_back(position);
    } else if (code == best_code_) {
      best_leaves_.push_back(position);
    }
  }

  const HalfEdgeGraph& g_;
  int n_;
  std::vector<int> mult_;
  std::vector<Edge> best_code_;
  std::vector<std::vector<int>> best_leaves_;
};

}  // namespace

HalfEdgeGraph relabel(const HalfEdgeGraph& g, std::span<const int> position) {
  if (static_cast<int>(position.size()) != g.vertex_count()) throw std::invalid_argument("relabel: position size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    const int a = position[static_cast<std::size_t>(e.tail)];
    const int b = position[static_cast<std::size_t>(e.head)];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  return HalfEdgeGraph(g.externals(), g.internals(), std::move(edges));
}

CanonicalForm canonical_form(const HalfEdgeGraph& g) {
  if (g.vertex_count() == 0) return CanonicalForm{g, {}, {{}}};
  return Labeler(g).run();
}

int orientation_sign(const HalfEdgeGraph& input, std::span<const int> position, Grading grading) {
  const int ext = input.externals();
  const int n = input.vertex_count();
  int sign = 1;
  if (grading.external == Parity::odd) sign *= permutation_sign(position.subspan(0, static_cast<std::size_t>(ext)));
  if (grading.ambient == Parity::odd) {
    std::vector<int> internal(position.begin() + ext, position.begin() + n);
    sign *= permutation_sign(internal);
  }

  const auto& edges = input.edges();
  std::vector<std::pair<Edge, int>> keyed;
  keyed.reserve(edges.size());
  int reversed = 0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const int a = position[static_cast<std::size_t>(edges[k].tail)];
    const int b = position[static_cast<std::size_t>(edges[k].head)];
    if (a > b) ++reversed;
    keyed.push_back({{std::min(a, b), std::max(a, b)}, static_cast<int>(k)});
  }
  if (grading.ambient == Parity::odd) {
    if (reversed % 2 != 0) sign = -sign;
  } else {
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> slot_of(edges.size());
    for (std::size_t s = 0; s < keyed.size(); ++s) slot_of[static_cast<std::size_t>(keyed[s].second)] = static_cast<int>(s);
    sign *= permutation_sign(slot_of);
  }
  return sign;
}

bool vanishes(const CanonicalForm& form, Grading grading) {
  const auto& edges = form.graph.edges();  // sorted, so parallel copies are adjacent
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const bool loop = edges[k].tail == edges[k].head;
    if (loop && grading.ambient == Parity::odd) return true;  // a loop flip costs (-1)^d
    if (k > 0 && edges[k] == edges[k - 1] && grading.ambient == Parity::even) return true;  // odd edges commute to -1
  }
  for (const auto& aut : form.automorphisms) {
    if (orientation_sign(form.graph, aut, grading) < 0) return true;
  }
  return false;
}

std::uint64_t automorphism_order(const CanonicalForm& form) {
  std::uint64_t order = form.automorphisms.size();
  const auto& edges = form.graph.edges();
  std::size_t k = 0;
  while (k < edges.size()) {
    std::size_t run = 1;
    while (k + run < edges.size() && edges[k + run] == edges[k]) ++run;
    for (std::uint64_t f = 2; f <= run; ++f) order *= f;
    if (edges[k].tail == edges[k].head) order <<= run;
    k += run;
  }
  return order;
}

}  // namespace knothodge
