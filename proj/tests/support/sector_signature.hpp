#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>
#include <vector>

#include "tcat/catalog.hpp"
#include "tcat/closure.hpp"

namespace tcat::testing {

/// Per sector: (parent labels of its orbit, dimension x 1e6 rounded, multiplicity, Galois orbit size).
using SectorSignature = std::tuple<std::vector<int>, long, int, std::size_t>;

inline std::vector<std::size_t> orbit_sizes(std::size_t n, const std::vector<std::vector<std::size_t>>& perms) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : perms) {
    for (std::size_t i = 0; i < n; ++i) parent[root(i)] = root(p[i]);
  }
  std::vector<std::size_t> count(n, 0), out(n);
  for (std::size_t i = 0; i < n; ++i) ++count[root(i)];
  for (std::size_t i = 0; i < n; ++i) out[i] = count[root(i)];
  return out;
}

inline std::vector<SectorSignature> signature(const ClosureReport& r) {
  const auto sizes = orbit_sizes(r.sectors.size(), r.galois_action);
  std::vector<SectorSignature> out;
  for (std::size_t i = 0; i < r.sectors.size(); ++i) {
    const Sector& s = r.sectors[i];
    std::vector<int> members(r.orbits[s.orbit].members.begin(), r.orbits[s.orbit].members.end());
    std::sort(members.begin(), members.end());
    out.emplace_back(members, std::lround(s.dim * 1e6), s.multiplicity, sizes[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SectorSignature> signature(const RestrictionTable& t) {
  const auto sizes = orbit_sizes(t.sectors.size(), t.galois_action);
  std::vector<SectorSignature> out;
  for (std::size_t i = 0; i < t.sectors.size(); ++i) {
    const RestrictionSector& s = t.sectors[i];
    std::vector<int> members = t.orbits[s.orbit];
    std::sort(members.begin(), members.end());
    out.emplace_back(members, std::lround(s.dim * 1e6), s.multiplicity, sizes[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tcat::testing
