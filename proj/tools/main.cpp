#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

using namespace knothodge;

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristics and graph complexes for the Hodge splitting of long knot spaces"};
  app.require_subcommand(1);

  std::string parity = "odd";
  int jmax = 4;

  auto* table = app.add_subcommand("table", "Emit the homology or homotopy Euler characteristic table");
  std::string kind = "homotopy", format = "csv";
  table->add_option("--kind", kind, "homology | homotopy")->capture_default_str();
  table->add_option("--parity", parity, "parity of d: odd | even")->capture_default_str();
  table->add_option("--jmax", jmax, "largest complexity (0..64)")->capture_default_str();
  table->add_option("--format", format, "csv | json | md")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Compare computed data with the reference fixtures");
  std::string suite = "all";
  bool corrupt = false, failures_only = false;
  verify->add_option("--suite", suite, "tables | closed-forms | oracle | graphs | homology | all")->capture_default_str();
  verify->add_flag("--corrupt", corrupt, "perturb one computed value per suite (negative control)");
  verify->add_flag("--failures-only", failures_only, "print failing comparisons only");

  auto* graphs = app.add_subcommand("graphs", "Enumerate graph classes and compute graph homology");
  int i = 2, j = 1;
  long k = 1;
  std::string action = "count";
  graphs->add_option("--i", i, "Hodge degree (external vertices)")->capture_default_str();
  graphs->add_option("--j", j, "complexity")->capture_default_str();
  graphs->add_option("--parity", parity, "parity of d: odd | even")->capture_default_str();
  graphs->add_option("--k", k, "degree of external vertices")->capture_default_str();
  graphs->add_option("--action", action, "count | list | homology | euler")->capture_default_str();

  auto* genfun = app.add_subcommand("genfun", "Print the coefficients P_j(x) of the generating function");
  genfun->add_option("--parity", parity, "parity of d: odd | even")->capture_default_str();
  genfun->add_option("--jmax", jmax, "truncation order")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Recompute P_j(x) from cycle index sums and compare");
  oracle->add_option("--parity", parity, "parity of d: odd | even")->capture_default_str();
  oracle->add_option("--jmax", jmax, "truncation order (0..6)")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*table) {
      return cli::cmd_table(parse_table_kind(kind), parse_parity(parity), jmax, parse_table_format(format), std::cout);
    }
    if (*verify) return cli::cmd_verify(parse_suite(suite), corrupt, failures_only, std::cout);
    if (*graphs) return cli::cmd_graphs(i, j, parse_parity(parity), k, cli::parse_graph_action(action), std::cout);
    if (*genfun) return cli::cmd_genfun(parse_parity(parity), jmax, std::cout);
    if (*oracle) return cli::cmd_oracle(parse_parity(parity), jmax, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
