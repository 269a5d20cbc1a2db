#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace knothodge {

enum class Suite { tables, closed_forms, oracle, graphs, homology, all };

std::string_view to_string(Suite suite);
/// Accepts tables, closed-forms, oracle, graphs, homology, all.
Suite parse_suite(std::string_view text);

struct CheckLine {
  std::string suite;
  std::string item;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckLine> lines;

  bool ok() const;
  std::size_t failures() const;
  /// One line per compared item, then a summary line.
  void print(std::ostream& os, bool failures_only = false) const;
};

struct VerifyOptions {
  /// Negative control: perturbs one computed value per suite so it must fail.
  bool corrupt = false;
};

VerifyReport run_verify(Suite suite, VerifyOptions options = {});

}  // namespace knothodge
