#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace tcat::cli;
  CLI::App app{"tcat: premodular category data, symmetric centers and modular closures"};
  app.require_subcommand(1);

  Options opt;
  std::optional<double> tolerance;
  auto common = [&](CLI::App* sub, bool closure_flags) {
    sub->add_option("input", opt.input, "category file, or a catalog entry name")->required();
    sub->add_option("--tolerance", tolerance, "comparison tolerance (default 1e-9, env TCAT_TOLERANCE)");
    if (closure_flags) {
      sub->add_option("--transparent", opt.transparent, "'auto' or a comma-separated list of labels");
      sub->add_option("--format", opt.format, "table or json");
    }
  };

  auto* validate = app.add_subcommand("validate", "check ring, premodular and skeletal data");
  common(validate, false);
  auto* center = app.add_subcommand("center", "transparent simples, boson/fermion split and modularity");
  common(center, false);
  center->add_option("--format", opt.format, "table or json");
  auto* close = app.add_subcommand("close", "sector table of the crossed product by a transparent subgroup");
  common(close, true);
  auto* galois = app.add_subcommand("galois", "Galois lattice of intermediate closures");
  common(galois, true);

  auto* catalog = app.add_subcommand("catalog", "built-in example categories");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list catalog entries");
  std::string export_name, export_path;
  auto* exp = catalog->add_subcommand("export", "print an entry as a category file");
  exp->add_option("name", export_name, "catalog entry")->required();
  exp->add_option("-o,--output", export_path, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (catalog->parsed()) {
    if (exp->parsed()) return cmd_catalog_export(export_name, export_path, std::cout, std::cerr);
    return cmd_catalog_list(std::cout);
  }
  try {
    opt.tol = resolve_tolerance(tolerance, std::getenv("TCAT_TOLERANCE"));
  } catch (const tcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  if (validate->parsed()) return cmd_validate(opt, std::cout, std::cerr);
  if (center->parsed()) return cmd_center(opt, std::cout, std::cerr);
  if (close->parsed()) return cmd_close(opt, std::cout, std::cerr);
  return cmd_galois(opt, std::cout, std::cerr);
}
