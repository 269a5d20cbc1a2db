#include "knothodge/table_io.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace knothodge {

std::string_view to_string(TableFormat format) {
  switch (format) {
    case TableFormat::csv:
      return "csv";
    case TableFormat::json:
      return "json";
    case TableFormat::md:
      return "md";
  }
  return "?";
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::csv;
  if (text == "json") return TableFormat::json;
  if (text == "md") return TableFormat::md;
  throw std::invalid_argument("unsupported format '" + std::string(text) + "' (expected csv, json or md)");
}

namespace {

using nlohmann::ordered_json;

int column_count(const EulerTable& table) {
  int cols = 2 * table.jmax();
  for (const auto& [key, value] : table.entries()) cols = std::max(cols, key.second);
  return cols;
}

std::string metadata(const EulerTable& table) {
  std::ostringstream os;
  os << "kind=" << to_string(table.kind()) << " parity=" << to_string(table.parity()) << " jmax=" << table.jmax();
  return os.str();
}

EulerTable parse_metadata(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kind, parity, jmax;
  in >> kind >> parity >> jmax;
  if (kind.rfind("kind=", 0) != 0 || parity.rfind("parity=", 0) != 0 || jmax.rfind("jmax=", 0) != 0) {
    throw std::invalid_argument("read_table: malformed metadata '" + std::string(line) + "'");
  }
  return EulerTable(parse_table_kind(kind.substr(5)), parse_parity(parity.substr(7)), std::stoi(jmax.substr(5)));
}

std::string write_grid(const EulerTable& table, std::string_view sep, std::string_view open, std::string_view close) {
  const int cols = column_count(table);
  std::ostringstream os;
  os << open << 'j';
  for (int i = 1; i <= cols; ++i) os << sep << i;
  os << close << '\n';
  if (open == "| ") {
    os << "|---";
    for (int i = 1; i <= cols; ++i) os << "|---";
    os << "|\n";
  }
  for (int j = 1; j <= table.jmax(); ++j) {
    os << open << j;
    for (int i = 1; i <= cols; ++i) {
      os << sep;
      const Integer value = table.at(i, j);
      if (value != 0) os << value;
    }
    os << close << '\n';
  }
  return os.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

/// Reads header + rows where each row's cells are already split.
void read_rows(EulerTable& table, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw std::invalid_argument("read_table: missing header");
  const auto& header = rows.front();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) throw std::invalid_argument("read_table: ragged row");
    const int j = std::stoi(row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      const std::string cell = trim(row[c]);
      if (!cell.empty()) table.set(std::stoi(header[c]), j, Integer(cell));
    }
  }
}

}  // namespace

std::string write_table(const EulerTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::json: {
      ordered_json doc;
      doc["kind"] = to_string(table.kind());
      doc["parity"] = to_string(table.parity());
      doc["jmax"] = table.jmax();
      doc["entries"] = ordered_json::array();
      for (const auto& [key, value] : table.entries()) {
        ordered_json entry;
        entry["i"] = key.second;
        entry["j"] = key.first;
        if (value.fits_slong_p()) {
          entry["value"] = value.get_si();
        } else {
          entry["value"] = value.get_str();
        }
        doc["entries"].push_back(std::move(entry));
      }
      return doc.dump(2) + "\n";
    }
    case TableFormat::csv:
      return "# " + metadata(table) + "\n" + write_grid(table, ",", "", "");
    case TableFormat::md:
      return "<!-- " + metadata(table) + " -->\n" + write_grid(table, " | ", "| ", " |");
  }
  throw std::invalid_argument("write_table: unsupported format");
}

EulerTable read_table(std::string_view text, TableFormat format) {
  try {
    if (format == TableFormat::json) {
      const auto doc = nlohmann::json::parse(text);
      EulerTable table(parse_table_kind(doc.at("kind").get<std::string>()),
                       parse_parity(doc.at("parity").get<std::string>()), doc.at("jmax").get<int>());
      for (const auto& entry : doc.at("entries")) {
        const auto& v = entry.at("value");
        const Integer value = v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<long>());
        table.set(entry.at("i").get<int>(), entry.at("j").get<int>(), value);
      }
      return table;
    }
    std::istringstream in{std::string(text)};
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<std::string>> rows;
    if (format == TableFormat::csv) {
      if (line.rfind("# ", 0) != 0) throw std::invalid_argument("read_table: missing metadata line");
      EulerTable table = parse_metadata(line.substr(2));
      while (std::getline(in, line)) {
        if (!line.empty()) rows.push_back(split(line, ','));
      }
      read_rows(table, rows);
      return table;
    }
    const std::string open = "<!-- ", close = " -->";
    if (line.rfind(open, 0) != 0 || line.size() < open.size() + close.size()) {
      throw std::invalid_argument("read_table: missing metadata comment");
    }
    EulerTable table = parse_metadata(line.substr(open.size(), line.size() - open.size() - close.size()));
    while (std::getline(in, line)) {
      if (line.rfind("|---", 0) == 0 || line.size() < 2) continue;
      auto cells = split(line.substr(1, line.size() - 2), '|');
      for (auto& c : cells) c = trim(c);
      rows.push_back(std::move(cells));
    }
    read_rows(table, rows);
    return table;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("read_table: ") + e.what());
  }
}

}  // namespace knothodge
