#include "knothodge/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "knothodge/rational.hpp"

namespace knothodge {

long SparseMatrix::at(int row, int col) const {
  const auto it = entries.find({row, col});
  return it == entries.end() ? 0 : it->second;
}

void SparseMatrix::add(int row, int col, long value) {
  if (row < 0 || row >= rows || col < 0 || col >= cols) throw std::out_of_range("SparseMatrix::add: index out of range");
  const long sum = at(row, col) + value;
  if (sum == 0) {
    entries.erase({row, col});
  } else {
    entries[{row, col}] = sum;
  }
}

SparseMatrix multiply(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.cols != rhs.rows) throw std::invalid_argument("multiply: shape mismatch");
  SparseMatrix out{lhs.rows, rhs.cols, {}};
  std::vector<std::vector<std::pair<int, long>>> rhs_rows(static_cast<std::size_t>(rhs.rows));
  for (const auto& [key, value] : rhs.entries) rhs_rows[static_cast<std::size_t>(key.first)].emplace_back(key.second, value);
  for (const auto& [key, value] : lhs.entries) {
    for (const auto& [col, r] : rhs_rows[static_cast<std::size_t>(key.second)]) out.add(key.first, col, value * r);
  }
  return out;
}

long rank_exact(const SparseMatrix& m) {
  if (m.entries.empty()) return 0;
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(m.rows), std::vector<Integer>(static_cast<std::size_t>(m.cols)));
  for (const auto& [key, value] : m.entries) a[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second)] = value;

  const std::size_t rows = a.size();
  const std::size_t cols = static_cast<std::size_t>(m.cols);
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]);
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<long>(rank);
}

std::size_t ChainComplexQ::total_size() const {
  std::size_t n = 0;
  for (const auto& b : basis) n += b.size();
  return n;
}

ChainComplexQ build_complex(int i, int j, Parity ambient, long k, bool drop_loops) {
  check_bounds(i, j, 0);
  ChainComplexQ c;
  c.i = i;
  c.j = j;
  c.ambient = ambient;
  c.k = k;
  const int vmax = 2 * j - i;
  for (int v = 0; v <= vmax; ++v) {
    auto classes = enumerate(i, j, v, ambient, parity_of(k));
    if (drop_loops) {
      std::erase_if(classes, [](const GraphClass& g) { return has_loop(g.graph); });
    }
    c.basis.push_back(std::move(classes));
  }
  for (int v = 0; v < vmax; ++v) {
    const auto& source = c.basis[static_cast<std::size_t>(v)];
    const auto& target = c.basis[static_cast<std::size_t>(v + 1)];
    SparseMatrix m{static_cast<int>(target.size()), static_cast<int>(source.size()), {}};
    for (std::size_t col = 0; col < source.size(); ++col) {
      for (const auto& [image, coeff] : differential(source[col], c.grading())) {
        const auto it = std::lower_bound(target.begin(), target.end(), image);
        if (it == target.end() || !(*it == image)) {
          if (drop_loops && has_loop(image.graph)) continue;
          throw std::logic_error("build_complex: differential leaves the enumerated basis");
        }
        m.add(static_cast<int>(it - target.begin()), static_cast<int>(col), coeff);
      }
    }
    c.differentials.push_back(std::move(m));
  }
  return c;
}

std::vector<HomologyGroup> homology_dims(const ChainComplexQ& c) {
  std::vector<long> ranks;
  for (const auto& m : c.differentials) ranks.push_back(rank_exact(m));
  std::vector<HomologyGroup> out;
  for (std::size_t v = 0; v < c.basis.size(); ++v) {
    long dim = static_cast<long>(c.basis[v].size());
    if (v < ranks.size()) dim -= ranks[v];
    if (v > 0) dim -= ranks[v - 1];
    if (dim < 0) throw std::logic_error("homology_dims: negative dimension");
    out.push_back({static_cast<int>(v), dim, graph_degree(c.i, c.j, static_cast<int>(v), c.k)});
  }
  return out;
}

std::vector<HomologyGroup> nonzero_homology(const ChainComplexQ& c) {
  auto groups = homology_dims(c);
  std::erase_if(groups, [](const HomologyGroup& g) { return g.dim == 0; });
  return groups;
}

long euler_characteristic(const std::vector<HomologyGroup>& groups, Parity ambient) {
  const long d = representative_dimension(ambient);
  long chi = 0;
  for (const auto& g : groups) chi += (g.degree.at(d) % 2 == 0) ? g.dim : -g.dim;
  return chi;
}

DSquaredReport verify_d_squared(const ChainComplexQ& c) {
  for (std::size_t v = 0; v + 1 < c.differentials.size(); ++v) {
    const SparseMatrix product = multiply(c.differentials[v + 1], c.differentials[v]);
    if (!product.entries.empty()) {
      const auto& [key, value] = *product.entries.begin();
      return {false, static_cast<int>(v), key.first, key.second, value};
    }
  }
  return {};
}

}  // namespace knothodge
