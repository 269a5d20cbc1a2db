#include "knothodge/cycleindex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "knothodge/arith.hpp"
#include "knothodge/genfun.hpp"
#include "knothodge/ulaurent.hpp"

namespace knothodge {

Partition::Partition(std::vector<std::pair<int, int>> parts) {
  std::sort(parts.begin(), parts.end());
  for (const auto& [ell, k] : parts) {
    if (ell < 1 || k < 0) throw std::invalid_argument("Partition: need l >= 1 and k >= 0");
    if (k == 0) continue;
    if (!parts_.empty() && parts_.back().first == ell) {
      parts_.back().second += k;
    } else {
      parts_.emplace_back(ell, k);
    }
  }
}

int Partition::weight() const {
  int n = 0;
  for (const auto& [ell, k] : parts_) n += ell * k;
  return n;
}

int Partition::multiplicity(int ell) const {
  for (const auto& [l, k] : parts_) {
    if (l == ell) return k;
  }
  return 0;
}

Integer Partition::centralizer_order() const {
  Integer z = 1;
  for (const auto& [ell, k] : parts_) {
    for (int r = 1; r <= k; ++r) z *= ell * r;
  }
  return z;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t n = 0; n < parts_.size(); ++n) os << (n ? "," : "") << parts_[n].first << ':' << parts_[n].second;
  os << '}';
  return os.str();
}

Partition operator*(const Partition& a, const Partition& b) {
  auto parts = a.parts_;
  parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
  return Partition(std::move(parts));
}

namespace {

void extend(int remaining, int max_part, std::vector<std::pair<int, int>>& prefix, std::vector<Partition>& out) {
  out.emplace_back(prefix);
  for (int ell = std::min(remaining, max_part); ell >= 1; --ell) {
    for (int k = 1; k * ell <= remaining; ++k) {
      prefix.emplace_back(ell, k);
      extend(remaining - k * ell, ell - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

/// exp of sum_{m>=1} g[m] a^m as a-coefficients f[0..top].
std::vector<USeries> exp_in_a(const std::vector<USeries>& g, int top, int order) {
  std::vector<USeries> f(static_cast<std::size_t>(top) + 1, USeries(order));
  f[0] = USeries::one(order);
  for (int n = 1; n <= top; ++n) {
    USeries acc(order);
    for (int m = 1; m <= n && m < static_cast<int>(g.size()); ++m) {
      if (g[static_cast<std::size_t>(m)].is_zero()) continue;
      acc += g[static_cast<std::size_t>(m)] * f[static_cast<std::size_t>(n - m)] * XPoly(m);
    }
    f[static_cast<std::size_t>(n)] = acc * XPoly(Rational(1, n));
  }
  return f;
}

/// E_l(1/u) as a Laurent polynomial.
ULaurent necklace_at_inverse(long ell) {
  ULaurent out;
  for (long m : divisors(ell)) {
    const int mu = mobius(m);
    if (mu != 0) out += ULaurent::monomial(XPoly(Rational(mu, ell)), static_cast<int>(-ell / m));
  }
  return out;
}

/// a-log coefficients g[1..top] of (1 + c a)^M, c = scale * u^l, M = sign * E_l(1/u).
std::vector<USeries> binomial_log(long ell, Parity ambient, const Rational& scale, int top, int order) {
  const Rational sign = ambient == Parity::even ? 1 : -1;
  const ULaurent m_exp = necklace_at_inverse(ell) * XPoly(sign);
  std::vector<USeries> g(static_cast<std::size_t>(top) + 1, USeries(order));
  ULaurent c_power = ULaurent::monomial(XPoly(1), 0);
  const ULaurent c = ULaurent::monomial(XPoly(scale), static_cast<int>(ell));
  for (int m = 1; m <= top; ++m) {
    c_power = c_power * c;
    const Rational coeff((m % 2 == 1) ? 1 : -1, m);
    g[static_cast<std::size_t>(m)] = (m_exp * c_power * XPoly(coeff)).to_series(order);
  }
  return g;
}

USeries broadcast(const USeries& s, int order) { return s.order() == order ? s : s.with_order(order); }

}  // namespace

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  std::vector<std::pair<int, int>> prefix;
  extend(n, n, prefix, out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return std::pair(a.weight(), a) < std::pair(b.weight(), b);
  });
  return out;
}

USeries CycleIndexSeries::coefficient(const Partition& p) const {
  const auto it = coefficients.find(p);
  return it == coefficients.end() ? USeries(order) : it->second;
}

CycleIndexSeries operator*(const CycleIndexSeries& a, const CycleIndexSeries& b) {
  if (a.order != b.order && a.order != 0 && b.order != 0) throw std::invalid_argument("CycleIndexSeries: order mismatch");
  CycleIndexSeries out;
  out.max_weight = std::min(a.max_weight, b.max_weight);
  out.order = std::max(a.order, b.order);
  for (const auto& [pa, ca] : a.coefficients) {
    if (pa.weight() > out.max_weight) continue;
    for (const auto& [pb, cb] : b.coefficients) {
      if (pa.weight() + pb.weight() > out.max_weight) continue;
      const USeries term = broadcast(ca, out.order) * broadcast(cb, out.order);
      auto [it, inserted] = out.coefficients.try_emplace(pa * pb, term);
      if (!inserted) it->second += term;
    }
  }
  std::erase_if(out.coefficients, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

namespace {

/// Assembles prod_l (sum_k per_ell[l][k] a_l^k) over partitions of weight <= n.
CycleIndexSeries from_factors(const std::vector<std::vector<USeries>>& per_ell, int n, int order) {
  CycleIndexSeries out;
  out.max_weight = n;
  out.order = order;
  for (const auto& p : partitions_up_to(n)) {
    USeries c = USeries::one(order);
    for (const auto& [ell, k] : p.parts()) c = c * per_ell[static_cast<std::size_t>(ell)][static_cast<std::size_t>(k)];
    if (!c.is_zero()) out.coefficients.emplace(p, std::move(c));
  }
  return out;
}

}  // namespace

CycleIndexSeries conf_cycle_index(Parity ambient, int max_weight, int order, bool normalized) {
  if (max_weight < 0 || order < 0) throw std::invalid_argument("conf_cycle_index: negative size");
  std::vector<std::vector<USeries>> per_ell(static_cast<std::size_t>(max_weight) + 1);
  const Rational scale = ambient == Parity::even ? 1 : -1;
  for (int ell = 1; ell <= max_weight; ++ell) {
    const int top = max_weight / ell;
    auto g = binomial_log(ell, ambient, scale, top, order);
    if (normalized) g[1] -= USeries::constant(order, XPoly(Rational(1, ell)));
    per_ell[static_cast<std::size_t>(ell)] = exp_in_a(g, top, order);
  }
  return from_factors(per_ell, max_weight, order);
}

CycleIndexSeries hodge_cycle_index(int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("hodge_cycle_index: negative size");
  std::vector<std::vector<USeries>> per_ell(static_cast<std::size_t>(max_weight) + 1);
  for (int ell = 1; ell <= max_weight; ++ell) {
    const XPoly top = -necklace(ell);
    for (int k = 0; k * ell <= max_weight; ++k) {
      const bool flip = ell % 2 == 1 && k % 2 == 1;
      per_ell[static_cast<std::size_t>(ell)].push_back(USeries::constant(0, flip ? -binomial(top, k) : binomial(top, k)));
    }
  }
  return from_factors(per_ell, max_weight, 0);
}

CycleIndexSeries trivial_cycle_index(int max_weight, int order) {
  if (max_weight < 0 || order < 0) throw std::invalid_argument("trivial_cycle_index: negative size");
  std::vector<std::vector<USeries>> per_ell(static_cast<std::size_t>(max_weight) + 1);
  for (int ell = 1; ell <= max_weight; ++ell) {
    Rational c = 1;
    for (int k = 0; k * ell <= max_weight; ++k) {
      if (k > 0) c /= Rational(ell * k);
      per_ell[static_cast<std::size_t>(ell)].push_back(USeries::constant(order, XPoly(c)));
    }
  }
  return from_factors(per_ell, max_weight, order);
}

USeries pair(const CycleIndexSeries& v, const CycleIndexSeries& w, PairingSign sign) {
  if (v.order != w.order && v.order != 0 && w.order != 0) throw std::invalid_argument("pair: order mismatch");
  const int order = std::max(v.order, w.order);
  const int n = std::min(v.max_weight, w.max_weight);
  USeries sum(order);
  for (const auto& [p, cv] : v.coefficients) {
    if (p.weight() > n) continue;
    const auto it = w.coefficients.find(p);
    if (it == w.coefficients.end()) continue;
    Rational z(p.centralizer_order());
    if (sign == PairingSign::desuspended && p.weight() % 2 == 1) z = -z;
    sum += broadcast(cv, order) * broadcast(it->second, order) * XPoly(z);
  }
  return sum;
}

USeries factor_operator(long ell, Parity ambient, int order) {
  if (ell < 1 || order < 0) throw std::invalid_argument("factor_operator: need l >= 1 and order >= 0");
  const int kmax = 2 * order;
  const int top = kmax + 2;
  const Rational scale = ambient == Parity::even ? Rational(ell) : Rational(-ell);
  auto g = binomial_log(ell, ambient, scale, top, order);
  g[1] -= USeries::one(order);
  const auto f = exp_in_a(g, top, order);
  for (int k = kmax + 1; k <= top; ++k) {
    if (!f[static_cast<std::size_t>(k)].is_zero()) {
      throw std::logic_error("factor_operator: operator sum has not stabilized at k = " + std::to_string(k));
    }
  }
  const XPoly minus_e = -necklace(ell);
  XPoly falling(1);
  USeries sum(order);
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) falling *= minus_e - XPoly(k - 1);
    sum += f[static_cast<std::size_t>(k)] * falling;
  }
  return sum;
}

}  // namespace knothodge
