#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knothodge/parity.hpp"
#include "knothodge/useries.hpp"

namespace knothodge {

/// Integer partition as the monomial prod_l a_l^{k_l}: sorted (l, k) pairs, k >= 1.
class Partition {
 public:
  Partition() = default;
  /// Pairs with k = 0 are dropped; repeated l are merged. Throws on l < 1 or k < 0.
  explicit Partition(std::vector<std::pair<int, int>> parts);

  const std::vector<std::pair<int, int>>& parts() const { return parts_; }
  int weight() const;
  /// Multiplicity k_l (0 when absent).
  int multiplicity(int ell) const;
  /// prod_l l^{k_l} k_l!, the centralizer order of the matching permutation.
  Integer centralizer_order() const;

  /// "{1:2,3:1}"; the empty partition is "{}".
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend Partition operator*(const Partition& a, const Partition& b);

 private:
  std::vector<std::pair<int, int>> parts_;
};

/// All partitions of weight 0..n.
std::vector<Partition> partitions_up_to(int n);

/// sum over partitions of weight <= max_weight of coefficient * prod a_l^{k_l}.
/// Coefficients are u-series of a common order (order 0 for u-free data).
struct CycleIndexSeries {
  int max_weight = 0;
  int order = 0;
  std::map<Partition, USeries> coefficients;

  /// Zero series of the right order when absent.
  USeries coefficient(const Partition& p) const;
};

/// Product truncated at the smaller max weight. An order-0 operand is read at
/// the other operand's order.
CycleIndexSeries operator*(const CycleIndexSeries& a, const CycleIndexSeries& b);

/// Cycle index sum of the configuration-space homology with z = -1,
///   prod_l e^{-a_l/l} (1 + (-1)^d u^l a_l)^{(-1)^d E_l(1/u)}
/// (without the exponential factors when `normalized` is false).
/// Throws std::domain_error if a coefficient keeps a negative power of u.
CycleIndexSeries conf_cycle_index(Parity ambient, int max_weight, int order, bool normalized = true);

/// prod_l (1 + (-1)^l a_l)^{-E_l(x)}, with order-0 coefficients.
CycleIndexSeries hodge_cycle_index(int max_weight);

/// prod_l e^{a_l/l}.
CycleIndexSeries trivial_cycle_index(int max_weight, int order);

enum class PairingSign {
  plain,         ///< sum_lambda c_V c_W z_lambda
  desuspended,   ///< with the extra (-1)^{|lambda|} of the degree shift
};

/// sum_lambda (+-) c_V(lambda) c_W(lambda) prod l^{k_l} k_l!.
USeries pair(const CycleIndexSeries& v, const CycleIndexSeries& w, PairingSign sign = PairingSign::desuspended);

/// (1 + d/da)^{-E_l(x)} applied to e^{-a}(1 + c a)^M at a = 0, with
/// c = (-1)^d l u^l and M = (-1)^d E_l(1/u). Equal to factor(l, d, order).
/// Throws std::logic_error if the operator sum fails to stabilize by 2*order.
USeries factor_operator(long ell, Parity ambient, int order);

}  // namespace knothodge
