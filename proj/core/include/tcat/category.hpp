#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcat/premodular.hpp"
#include "tcat/skeletal.hpp"

namespace tcat {

/// Stored-data conventions of a category file.
struct Conventions {
  bool hexagon_right = false;  // stored R-symbols belong to the reverse braiding
  bool trivial_f_default = true;
};

/// Commutator table of an orbit's stabilizer, indexed like `elements`.
struct SuppliedBeta {
  std::vector<Label> elements;
  std::vector<std::vector<Amplitude>> values;
};

/// Everything known about one category: the premodular tier, optional skeletal
/// symbols (always in the left-hexagon convention) and optional supplied beta blocks.
struct Category {
  std::string name;
  PremodularData data;
  std::optional<SkeletalData> skeletal;
  std::map<Label, SuppliedBeta> supplied_beta;  // keyed by orbit representative
  Conventions conventions;
};

}  // namespace tcat
