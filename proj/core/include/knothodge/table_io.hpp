#pragma once

#include <string>
#include <string_view>

#include "knothodge/hodge.hpp"

namespace knothodge {

enum class TableFormat { csv, json, md };

std::string_view to_string(TableFormat format);
/// Accepts "csv", "json", "md"; throws std::invalid_argument otherwise.
TableFormat parse_table_format(std::string_view text);

/// Byte-deterministic serialization.
///
/// json: {"kind", "parity", "jmax", "entries": [{"i", "j", "value"}]}, entries
///       ordered by (j, i), zeros omitted; values outside int64 become strings.
/// csv:  a "# kind=... parity=... jmax=..." line, a header "j,1,2,...", one row
///       per j; zero cells are blank.
/// md:   the same grid as a markdown table after an HTML comment with the metadata.
std::string write_table(const EulerTable& table, TableFormat format);

/// Inverse of write_table; throws std::invalid_argument on malformed input.
EulerTable read_table(std::string_view text, TableFormat format);

}  // namespace knothodge
