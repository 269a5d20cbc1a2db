#include "knothodge/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "knothodge/cycleindex.hpp"
#include "knothodge/fixtures.hpp"
#include "knothodge/gamma.hpp"
#include "knothodge/genfun.hpp"
#include "knothodge/graphs.hpp"
#include "knothodge/hodge.hpp"
#include "knothodge/homology.hpp"

namespace knothodge {

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::tables:
      return "tables";
    case Suite::closed_forms:
      return "closed-forms";
    case Suite::oracle:
      return "oracle";
    case Suite::graphs:
      return "graphs";
    case Suite::homology:
      return "homology";
    case Suite::all:
      return "all";
  }
  return "?";
}

Suite parse_suite(std::string_view text) {
  for (Suite s : {Suite::tables, Suite::closed_forms, Suite::oracle, Suite::graphs, Suite::homology, Suite::all}) {
    if (text == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(text) + "'");
}

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& l : lines) n += l.pass ? 0 : 1;
  return n;
}

void VerifyReport::print(std::ostream& os, bool failures_only) const {
  for (const auto& l : lines) {
    if (failures_only && l.pass) continue;
    os << (l.pass ? "ok   " : "FAIL ") << l.suite << ' ' << l.item << " expected=" << l.expected << " actual=" << l.actual
       << '\n';
  }
  os << (ok() ? "PASS" : "FAIL") << ": " << lines.size() - failures() << '/' << lines.size() << " checks passed\n";
}

namespace {

template <typename T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

class Recorder {
 public:
  Recorder(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  template <typename A, typename B>
  void check(const std::string& item, const A& expected, const B& actual) {
    report_.lines.push_back({suite_, item, show(expected), show(actual), expected == actual});
  }

 private:
  VerifyReport& report_;
  std::string suite_;
};

std::string cell(std::string_view what, int i, int j) {
  std::ostringstream os;
  os << what << "(i=" << i << ",j=" << j << ")";
  return os.str();
}

void compare_tables(Recorder& rec, std::string_view what, const EulerTable& expected, const EulerTable& actual, int imax) {
  for (int j = 1; j <= expected.jmax(); ++j) {
    for (int i = 1; i <= imax; ++i) rec.check(cell(what, i, j), expected.at(i, j), actual.at(i, j));
  }
}

void suite_tables(VerifyReport& report, const VerifyOptions& options) {
  Recorder rec(report, "tables");
  for (Parity p : {Parity::odd, Parity::even}) {
    const std::string tag(to_string(p));
    const USeries f = assemble(p, fixture_jmax);
    EulerTable homotopy = homotopy_from_homology(f, p, fixture_jmax);
    if (options.corrupt && p == Parity::odd) homotopy.set(2, 1, homotopy.at(2, 1) + 1);
    const EulerTable homology = homology_table(f, p, fixture_jmax);

    const auto expansion = fixture_expansion(p);
    for (std::size_t j = 0; j < expansion.size(); ++j) {
      rec.check("expansion-" + tag + "(u^" + std::to_string(j) + ")", expansion[j], f[static_cast<int>(j)]);
    }
    compare_tables(rec, "homotopy-" + tag, fixture_homotopy(p), homotopy, fixture_imax);
    compare_tables(rec, "homology-" + tag, fixture_homology(p), homology, fixture_imax);
    const auto totals = fixture_homotopy_abs_totals(p);
    for (int j = 1; j <= fixture_jmax; ++j) {
      Integer sum = 0;
      for (int i = 1; i <= fixture_imax; ++i) sum += abs(homotopy.at(i, j));
      rec.check("homotopy-total-" + tag + "(j=" + std::to_string(j) + ")", totals[static_cast<std::size_t>(j - 1)], sum);
    }
    if (p == Parity::odd) {
      rec.check(cell("homotopy-odd", 2, 10), Integer(5), homotopy.at(2, 10));
      rec.check(cell("homotopy-odd", 1, 20), Integer(12), homotopy.at(1, 20));
    }
  }
}

void suite_closed_forms(VerifyReport& report, const VerifyOptions& options) {
  Recorder rec(report, "closed-forms");
  const int order = fixture_jmax;
  for (Parity p : {Parity::odd, Parity::even}) {
    const std::string tag(to_string(p));
    USeries f = assemble(p, order);
    if (options.corrupt) f.set(1, f[1] + XPoly(std::vector<Rational>{0, 0, 1}));
    // 1/(1-u), 1/(1+u), 1/(1-u-2u^2), 1/(1-u+2u^2) as linear recurrences
    const long s = p == Parity::odd ? 1 : -1;
    const long two = p == Parity::odd ? 2 : -2;
    std::vector<Integer> at_one(static_cast<std::size_t>(order) + 1), at_minus_one(static_cast<std::size_t>(order) + 1);
    at_one[0] = 1;
    at_minus_one[0] = 1;
    for (int j = 1; j <= order; ++j) {
      at_one[static_cast<std::size_t>(j)] = s * at_one[static_cast<std::size_t>(j - 1)];
      at_minus_one[static_cast<std::size_t>(j)] =
          at_minus_one[static_cast<std::size_t>(j - 1)] + (j >= 2 ? two * at_minus_one[static_cast<std::size_t>(j - 2)] : Integer(0));
    }
    const USeries one = specialize(f, 1);
    const USeries minus_one = specialize(f, -1);
    for (int j = 0; j <= order; ++j) {
      rec.check("F_" + tag + "(1)[u^" + std::to_string(j) + "]", Rational(at_one[static_cast<std::size_t>(j)]), one[j].coefficient(0));
      rec.check("F_" + tag + "(-1)[u^" + std::to_string(j) + "]", Rational(at_minus_one[static_cast<std::size_t>(j)]),
                minus_one[j].coefficient(0));
    }
    const EulerTable homotopy = homotopy_from_homology(f, p, order);
    for (const auto& row : parity_sums(homotopy, false)) {
      rec.check("total-" + tag + "(j=" + std::to_string(row.j) + ")", homotopy_total(p, row.j), row.total);
      if (p == Parity::odd && row.j >= 2) {
        rec.check("even-degree-sum(j=" + std::to_string(row.j) + ")", even_degree_sum_closed_form(row.j), row.even);
      }
    }
  }
}

void suite_oracle(VerifyReport& report, const VerifyOptions& options) {
  Recorder rec(report, "oracle");
  const int order = 4;
  const CycleIndexSeries hodge = hodge_cycle_index(2 * order);
  for (Parity p : {Parity::odd, Parity::even}) {
    const std::string tag(to_string(p));
    CycleIndexSeries conf = conf_cycle_index(p, 2 * order, order);
    if (options.corrupt) {
      auto& c = conf.coefficients[Partition({{1, 1}})];
      c.set(0, c[0] + XPoly(1));
    }
    const USeries paired = pair(hodge, conf);
    const USeries f = assemble(p, order);
    for (int j = 0; j <= order; ++j) rec.check("pair-" + tag + "(u^" + std::to_string(j) + ")", f[j], paired[j]);
    const int op_order = 8;
    const USeries gamma = gamma_expansion(op_order);
    for (long ell = 1; ell <= 3; ++ell) {
      const USeries direct = factor(ell, p, gamma);
      const USeries via_operator = factor_operator(ell, p, op_order);
      for (int j = 0; j <= op_order; ++j) {
        rec.check("factor-" + tag + "(l=" + std::to_string(ell) + ",u^" + std::to_string(j) + ")", direct[j], via_operator[j]);
      }
    }
  }
  const int gamma_order = 20;
  const USeries gamma = gamma_expansion(gamma_order);
  for (long n = -8; n <= 8; ++n) {
    const USeries at = specialize(gamma, n);
    const USeries product = gamma_product_at_integer(n, gamma_order);
    for (int j = 0; j <= gamma_order; ++j) {
      rec.check("gamma(n=" + std::to_string(n) + ",u^" + std::to_string(j) + ")", product[j], at[j]);
    }
  }
}

void suite_graphs(VerifyReport& report, const VerifyOptions& options) {
  Recorder rec(report, "graphs");
  struct Count {
    int i, j;
    Parity p;
    std::size_t expected;
  };
  const Count counts[] = {{2, 1, Parity::odd, 1}, {1, 1, Parity::even, 1}, {2, 3, Parity::odd, 5},
                          {1, 3, Parity::odd, 9}, {3, 3, Parity::odd, 0},  {4, 3, Parity::odd, 0},
                          {3, 3, Parity::even, 0}};
  bool first = true;
  for (const auto& c : counts) {
    std::size_t total = reduced_classes(c.i, c.j, c.p).size();
    if (options.corrupt && first) ++total;
    first = false;
    rec.check("count-" + std::string(to_string(c.p)) + "(i=" + std::to_string(c.i) + ",j=" + std::to_string(c.j) + ")",
              c.expected, total);
  }
  for (const auto& s : fixture_symmetry_graphs()) rec.check("symmetry " + s.graph.str(), s.order, automorphism_order(s.graph));
  const int jmax = 4;
  for (Parity p : {Parity::odd, Parity::even}) {
    const EulerTable expected = homotopy_from_homology(assemble(p, jmax), p, jmax);
    compare_tables(rec, "euler-" + std::string(to_string(p)), expected, euler_table(p, jmax), 2 * jmax);
  }
}

struct HomologyExpectation {
  int i, j;
  Parity p;
  std::string groups;  // "v:dim@degree ..." of the nonzero groups
};

std::string describe(const std::vector<HomologyGroup>& groups) {
  std::ostringstream os;
  for (std::size_t n = 0; n < groups.size(); ++n) {
    os << (n ? " " : "") << "v" << groups[n].v << ":" << groups[n].dim << "@" << groups[n].degree.str();
  }
  return groups.empty() ? "none" : os.str();
}

void suite_homology(VerifyReport& report, const VerifyOptions& options) {
  Recorder rec(report, "homology");
  bool first = true;
  for (Parity p : {Parity::odd, Parity::even}) {
    for (long k : {1L, 2L}) {
      for (int j = 1; j <= 4; ++j) {
        for (int i = 1; i <= 2 * j; ++i) {
          const ChainComplexQ c = build_complex(i, j, p, k);
          const DSquaredReport r = verify_d_squared(c);
          std::ostringstream item;
          item << "d^2(" << to_string(p) << ",k=" << k << ",i=" << i << ",j=" << j << ")";
          rec.check(item.str(), std::string("0"), r.ok ? std::string("0") : "entry v=" + std::to_string(r.v));
        }
      }
    }
  }
  const HomologyExpectation expectations[] = {
      {2, 1, Parity::odd, "v0:1@d-3"},  {1, 2, Parity::odd, "v2:1@2d-5"}, {2, 2, Parity::odd, "v2:1@2d-6"},
      {1, 3, Parity::odd, "v4:1@3d-8"}, {2, 3, Parity::odd, "v4:1@3d-9"}, {3, 3, Parity::odd, "none"},
      {4, 3, Parity::odd, "none"},      {1, 1, Parity::even, "v1:1@d-3"}, {3, 2, Parity::even, "v1:1@2d-6"},
      {1, 3, Parity::even, "v4:1@3d-8"}, {2, 3, Parity::even, "v4:1@3d-9"}, {3, 3, Parity::even, "none"},
      {4, 3, Parity::even, "none"},
  };
  for (const auto& e : expectations) {
    std::ostringstream item;
    item << "H(" << to_string(e.p) << ",i=" << e.i << ",j=" << e.j << ")";
    ChainComplexQ c = build_complex(e.i, e.j, e.p);
    if (options.corrupt && first) {
      for (auto& m : c.differentials) {
        if (m.entries.empty()) continue;
        m.entries.clear();
        first = false;
        break;
      }
    }
    rec.check(item.str(), e.groups, describe(nonzero_homology(c)));
  }
  const EulerTable chord = fixture_chord_primitives();
  for (int j = 1; j <= 3; ++j) {
    long top = 0;
    for (const auto& g : homology_dims(build_complex(2, j, Parity::odd))) {
      if (g.degree == DegreeExpr{j, -3L * j}) top += g.dim;
    }
    rec.check(cell("chord-primitives", 2, j), chord.at(2, j), Integer(top));
  }
}

}  // namespace

VerifyReport run_verify(Suite suite, VerifyOptions options) {
  VerifyReport report;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::tables) suite_tables(report, options);
  if (all || suite == Suite::closed_forms) suite_closed_forms(report, options);
  if (all || suite == Suite::oracle) suite_oracle(report, options);
  if (all || suite == Suite::graphs) suite_graphs(report, options);
  if (all || suite == Suite::homology) suite_homology(report, options);
  return report;
}

}  // namespace knothodge
