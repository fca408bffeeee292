#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tcat/error.hpp"
#include "tcat/numerics.hpp"

namespace tcat::cli {

struct Options {
  std::string input;  // file path or catalog name
  Tolerance tol;
  std::string transparent = "auto";  // "auto" or a comma-separated label list
  std::string format = "table";      // "table" or "json"
};

/// 0 ok, 1 mathematical failure, 2 I/O or parse, 3 out of scope.
int exit_code(ErrorKind kind);

/// Flag value if given, else the environment variable if set and parseable, else the default.
/// Throws ErrorKind::Parse for a non-positive or unparseable value.
Tolerance resolve_tolerance(std::optional<double> flag, const char* env_value);

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_center(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_close(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_galois(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_catalog_list(std::ostream& out);
/// Writes to `output_path`, or to `out` when the path is empty.
int cmd_catalog_export(const std::string& name, const std::string& output_path, std::ostream& out, std::ostream& err);

}  // namespace tcat::cli
