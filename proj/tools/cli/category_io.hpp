#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcat/category.hpp"

namespace tcat::cli {

/// A category file after syntactic parsing, before any mathematical validation.
struct CategoryFile {
  std::string name;
  FusionRing ring;
  std::optional<std::vector<double>> dims;
  std::vector<Amplitude> twists;
  std::optional<Matrix> ymatrix;
  bool has_skeletal = false;
  std::map<FKey, Amplitude> f_symbols;
  std::map<RKey, Amplitude> r_symbols;  // already converted to the left-hexagon convention
  std::map<Label, SuppliedBeta> beta;
  Conventions conventions;
};

/// Throws ErrorKind::Parse on any schema violation.
CategoryFile parse_category(const nlohmann::json& j);
/// Throws ErrorKind::Parse on unreadable files as well.
CategoryFile read_category_file(const std::string& path);

/// Builds all declared tiers; mathematical inconsistencies throw their own error kinds.
Category assemble(const CategoryFile& file, Tolerance tol = {});

nlohmann::json amplitude_to_json(const Amplitude& a);
Amplitude amplitude_from_json(const nlohmann::json& j);

nlohmann::json category_to_json(const Category& cat);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string export_category(const Category& cat);

/// An existing file path, or else a catalog entry name.
Category load_category(const std::string& source, Tolerance tol = {});

}  // namespace tcat::cli
