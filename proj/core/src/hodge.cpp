#include "knothodge/hodge.hpp"

#include <sstream>
#include <stdexcept>

#include "knothodge/arith.hpp"

namespace knothodge {

std::string_view to_string(TableKind kind) { return kind == TableKind::homology ? "homology" : "homotopy"; }

TableKind parse_table_kind(std::string_view text) {
  if (text == "homology") return TableKind::homology;
  if (text == "homotopy") return TableKind::homotopy;
  throw std::invalid_argument("unknown table kind '" + std::string(text) + "' (expected homology or homotopy)");
}

EulerTable::EulerTable(TableKind kind, Parity parity, int jmax) : kind_(kind), parity_(parity), jmax_(jmax) {
  if (jmax < 0) throw std::invalid_argument("EulerTable: negative jmax");
}

Integer EulerTable::at(int i, int j) const {
  const auto it = entries_.find({j, i});
  return it == entries_.end() ? Integer(0) : it->second;
}

void EulerTable::set(int i, int j, const Integer& value) {
  if (i < 1 || j < 1 || j > jmax_) {
    std::ostringstream os;
    os << "EulerTable::set: cell (i=" << i << ", j=" << j << ") outside jmax=" << jmax_;
    throw std::out_of_range(os.str());
  }
  if (value == 0) {
    entries_.erase({j, i});
  } else {
    entries_[{j, i}] = value;
  }
}

EulerTable EulerTable::restricted(int jmax, int imax) const {
  EulerTable out(kind_, parity_, std::min(jmax, jmax_));
  for (const auto& [key, value] : entries_) {
    if (key.first <= out.jmax_ && key.second <= imax) out.entries_.emplace(key, value);
  }
  return out;
}

Integer EulerTable::row_sum(int j) const {
  Integer sum = 0;
  for (auto it = entries_.lower_bound({j, 0}); it != entries_.end() && it->first.first == j; ++it) sum += it->second;
  return sum;
}

EulerTable homology_table(const USeries& f, Parity parity, int jmax) {
  if (f.order() < jmax) throw std::domain_error("homology_table: series truncated below jmax");
  EulerTable table(TableKind::homology, parity, jmax);
  for (int j = 1; j <= jmax; ++j) {
    const XPoly& p = f[j];
    for (int i = 1; i <= p.degree(); ++i) {
      const Rational c = p.coefficient(i);
      if (!is_integer(c)) throw std::domain_error("homology_table: non-integer coefficient");
      table.set(i, j, c.get_num());
    }
  }
  return table;
}

EulerTable homotopy_from_homology(const USeries& f, Parity parity, int jmax) {
  if (f.order() < jmax) throw std::domain_error("homotopy_from_homology: series truncated below jmax");
  const USeries log_f = series_log(f.with_order(jmax));
  for (int b = 1; b <= jmax; ++b) {
    if (log_f[b].coefficient(0) != 0) {
      throw std::domain_error("homotopy_from_homology: log F has a nonzero x^0 u^" + std::to_string(b) + " term");
    }
  }
  EulerTable table(TableKind::homotopy, parity, jmax);
  for (int b = 1; b <= jmax; ++b) {
    for (int a = 1; a <= log_f[b].degree(); ++a) {
      Rational sum = 0;
      for (long m : divisors(gcd(a, b))) {
        const int mu = mobius(m);
        if (mu == 0) continue;
        sum += ratio(mu, m) * log_f[static_cast<int>(b / m)].coefficient(static_cast<int>(a / m));
      }
      if (!is_integer(sum)) {
        std::ostringstream os;
        os << "homotopy_from_homology: non-integer value " << sum << " at (i=" << a << ", j=" << b << ")";
        throw std::domain_error(os.str());
      }
      table.set(a, b, sum.get_num());
    }
  }
  return table;
}

USeries homology_from_homotopy(const EulerTable& homotopy, int order, std::optional<int> x_cap) {
  if (order < 0) throw std::invalid_argument("homology_from_homotopy: negative order");
  // log prod (1 - x^i u^j)^{-c} = sum_m c x^{im} u^{jm} / m
  std::vector<XPoly> log_coeffs(static_cast<std::size_t>(order) + 1);
  for (const auto& [key, value] : homotopy.entries()) {
    const auto [j, i] = key;
    for (int m = 1; j * m <= order; ++m) {
      log_coeffs[static_cast<std::size_t>(j * m)] += XPoly::monomial(ratio(value, m), i * m);
    }
  }
  USeries result = series_exp(USeries(order, std::move(log_coeffs)));
  if (x_cap) {
    for (int j = 0; j <= order; ++j) result.set(j, result[j].truncated(*x_cap));
  }
  return result;
}

Integer even_degree_sum_closed_form(long j) {
  if (j < 1) throw std::invalid_argument("even_degree_sum_closed_form: j must be >= 1");
  Integer sum = 0;
  for (long k : divisors(j)) {
    if (k % 2 == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(j / k));
    sum += mobius(k) * power;
  }
  const Rational value = ratio(sum, 2 * j);
  if (!is_integer(value)) throw std::logic_error("even_degree_sum_closed_form: non-integer value");
  return value.get_num();
}

Integer homotopy_total(Parity parity, long j) {
  if (parity == Parity::odd) return j == 1 ? 1 : 0;
  if (j == 1) return -1;
  if (j == 2) return 1;
  return 0;
}

std::vector<ParitySum> parity_sums(const EulerTable& homotopy, bool check) {
  std::vector<ParitySum> rows;
  for (int j = 1; j <= homotopy.jmax(); ++j) {
    ParitySum row;
    row.j = j;
    for (auto it = homotopy.entries().lower_bound({j, 0}); it != homotopy.entries().end() && it->first.first == j; ++it) {
      (it->first.second % 2 == 0 ? row.even : row.odd) += it->second;
    }
    row.total = row.even + row.odd;
    if (check) {
      if (row.total != homotopy_total(homotopy.parity(), j)) {
        std::ostringstream os;
        os << "parity_sums: row total " << row.total << " at j=" << j << " contradicts the expected "
           << homotopy_total(homotopy.parity(), j);
        throw std::logic_error(os.str());
      }
      if (homotopy.parity() == Parity::odd && j >= 2 && row.even != even_degree_sum_closed_form(j)) {
        std::ostringstream os;
        os << "parity_sums: even-degree sum " << row.even << " at j=" << j << " contradicts the closed form "
           << even_degree_sum_closed_form(j);
        throw std::logic_error(os.str());
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace knothodge
