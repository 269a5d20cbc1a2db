#pragma once

#include <ostream>
#include <string>

#include "knothodge/hodge.hpp"
#include "knothodge/parity.hpp"
#include "knothodge/table_io.hpp"
#include "knothodge/verify.hpp"

namespace knothodge::cli {

enum class GraphAction { count, list, homology, euler };

GraphAction parse_graph_action(const std::string& text);

/// Each command writes its result to `out` and returns the process exit code.
int cmd_table(TableKind kind, Parity parity, int jmax, TableFormat format, std::ostream& out);
int cmd_verify(Suite suite, bool corrupt, bool failures_only, std::ostream& out);
int cmd_graphs(int i, int j, Parity parity, long k, GraphAction action, std::ostream& out);
int cmd_genfun(Parity parity, int jmax, std::ostream& out);
int cmd_oracle(Parity parity, int jmax, std::ostream& out);

}  // namespace knothodge::cli
