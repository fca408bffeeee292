#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tcat/catalog.hpp"
#include "tcat/crossed.hpp"
#include "tcat/error.hpp"

namespace tcat::testing {

inline CrossedCalculus calculus_for(const Category& cat, const std::vector<std::string>& names) {
  std::vector<Label> labels;
  for (const auto& n : names) labels.push_back(cat.data.ring.lookup(n));
  return CrossedCalculus(*cat.skeletal, make_transparent_input(cat.data, labels));
}

inline CrossedCalculus calculus_for(const std::string& catalog_name, const std::vector<std::string>& names) {
  return calculus_for(catalog_get(catalog_name), names);
}

/// Error kind thrown by fn; a missing throw is reported as a test failure by the caller.
inline std::optional<ErrorKind> thrown_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace tcat::testing
