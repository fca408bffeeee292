#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tcat/closure.hpp"

namespace tcat::cli {

/// "1", "-1", "i", "-i" or "e(n/d)" for exact values; "x+yi" otherwise.
std::string format_scalar(const Amplitude& a);

nlohmann::json closure_to_json(const ClosureReport& report);
/// Inverse of closure_to_json; the K group table is not restored.
ClosureReport closure_from_json(const nlohmann::json& j);
std::string render_closure(const ClosureReport& report);

nlohmann::json lattice_to_json(const std::vector<GaloisEntry>& entries, const std::vector<std::string>& labels);
std::string render_lattice(const std::vector<GaloisEntry>& entries, const std::vector<std::string>& labels);

}  // namespace tcat::cli
