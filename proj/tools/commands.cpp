#include "commands.hpp"

#include <stdexcept>

#include "knothodge/cycleindex.hpp"
#include "knothodge/genfun.hpp"
#include "knothodge/graphs.hpp"
#include "knothodge/homology.hpp"

namespace knothodge::cli {

GraphAction parse_graph_action(const std::string& text) {
  if (text == "count") return GraphAction::count;
  if (text == "list") return GraphAction::list;
  if (text == "homology") return GraphAction::homology;
  if (text == "euler") return GraphAction::euler;
  throw std::invalid_argument("unknown action '" + text + "' (expected count, list, homology or euler)");
}

int cmd_table(TableKind kind, Parity parity, int jmax, TableFormat format, std::ostream& out) {
  if (jmax < 0 || jmax > 64) throw std::out_of_range("jmax must be in [0, 64]");
  const USeries f = assemble(parity, jmax);
  const EulerTable table = kind == TableKind::homology ? homology_table(f, parity, jmax) : homotopy_from_homology(f, parity, jmax);
  out << write_table(table, format);
  return 0;
}

int cmd_verify(Suite suite, bool corrupt, bool failures_only, std::ostream& out) {
  const VerifyReport report = run_verify(suite, {corrupt});
  report.print(out, failures_only);
  return report.ok() ? 0 : 1;
}

int cmd_graphs(int i, int j, Parity parity, long k, GraphAction action, std::ostream& out) {
  check_bounds(i, j, 0);
  switch (action) {
    case GraphAction::count: {
      out << reduced_classes(i, j, parity, parity_of(k)).size() << '\n';
      return 0;
    }
    case GraphAction::list: {
      for (const auto& c : reduced_classes(i, j, parity, parity_of(k))) {
        out << "v=" << c.v << " degree=" << c.degree(k).str() << " aut=" << automorphism_order(c.graph) << " : " << c.graph.str()
            << '\n';
      }
      return 0;
    }
    case GraphAction::homology: {
      const auto groups = nonzero_homology(build_complex(i, j, parity, k));
      if (groups.empty()) out << "none\n";
      for (const auto& g : groups) out << "v=" << g.v << " dim=" << g.dim << " degree=" << g.degree.str() << '\n';
      return 0;
    }
    case GraphAction::euler: {
      const ChainComplexQ c = build_complex(i, j, parity, k);
      const long d = representative_dimension(parity);
      long chi = 0;
      for (int v = 0; v <= 2 * j - i; ++v) {
        const long n = static_cast<long>(c.basis[static_cast<std::size_t>(v)].size());
        chi += graph_degree(i, j, v, k).at(d) % 2 == 0 ? n : -n;
      }
      out << "chi=" << chi << " d=" << d << " k=" << k << '\n';
      return 0;
    }
  }
  return 2;
}

int cmd_genfun(Parity parity, int jmax, std::ostream& out) {
  if (jmax < 0 || jmax > 64) throw std::out_of_range("jmax must be in [0, 64]");
  const USeries f = assemble(parity, jmax);
  for (int j = 0; j <= jmax; ++j) out << "P_" << j << " = " << f[j] << '\n';
  return 0;
}

int cmd_oracle(Parity parity, int jmax, std::ostream& out) {
  if (jmax < 0 || jmax > 6) throw std::out_of_range("oracle jmax must be in [0, 6]");
  const USeries paired = pair(hodge_cycle_index(2 * jmax), conf_cycle_index(parity, 2 * jmax, jmax));
  const USeries f = assemble(parity, jmax);
  bool ok = true;
  for (int j = 0; j <= jmax; ++j) {
    const bool same = paired[j] == f[j];
    ok = ok && same;
    out << (same ? "ok   " : "FAIL ") << "u^" << j << " : " << paired[j] << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace knothodge::cli
