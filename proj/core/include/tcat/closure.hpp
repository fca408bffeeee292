#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tcat/category.hpp"
#include "tcat/crossed.hpp"

namespace tcat {

using BetaTable = std::map<std::pair<Label, Label>, ExactPhase>;

struct OrbitRecord {
  Label representative = 0;
  std::vector<Label> members;
  std::vector<Label> stabilizer;  // K_rho in K element order
  std::vector<Label> radical;     // L_rho
  int multiplicity = 1;           // N_rho
  std::string beta_source;
  BetaTable beta;
};

/// K-orbits of all labels, representatives ascending; beta fields left empty.
std::vector<OrbitRecord> orbits(const FusionRing& ring, const GroupTable& K);

/// Fills the radical and multiplicity from beta. Throws ErrorKind::Inconsistent
/// if beta is not an alternating bicharacter or |K_rho|/|L_rho| is not a square.
OrbitRecord decompose_orbit(OrbitRecord rec, BetaTable beta, std::string source);

struct Sector {
  std::string name;
  std::size_t orbit = 0;                   // index into ClosureReport::orbits
  std::vector<int> character;              // exponents against the radical's basis
  std::vector<ExactPhase> character_values;  // aligned with the orbit's radical
  double dim = 1;
  Amplitude twist;
  bool degenerate = false;
  int multiplicity = 1;
};

struct ClosureReport {
  std::string parent;
  std::vector<std::string> labels;  // parent label names
  std::vector<Label> transparent;   // K
  GroupTable K;
  std::vector<OrbitRecord> orbits;
  std::vector<Sector> sectors;
  std::vector<std::vector<int>> galois_characters;       // exponents of each character of K
  std::vector<std::vector<std::size_t>> galois_action;   // sector permutation per character
  double global_dim_parent = 0;  // sum of d^2 over the parent
  double global_dim_closure = 0;  // sum of d^2 over the sectors
  bool modular = false;           // the unit sector is the only degenerate one
  bool trivial = false;           // symmetric parent closed by all of itself
};

/// Sector table of the crossed product of cat by the pointed transparent bosonic subcategory S.
ClosureReport close(const Category& cat, std::span<const Label> S, Tolerance tol = {});

/// Closure by the maximal bosonic center: all of it when it is pointed, the trivial
/// table when the category is symmetric and bosonic; other cases are out of scope.
ClosureReport close_auto(const Category& cat, Tolerance tol = {});

/// Sector permutation (orbit, chi) -> (orbit, g|_L chi) for a character g of the report's K.
std::vector<std::size_t> gaction_on_sectors(const ClosureReport& report, const Character& g);

struct GaloisEntry {
  std::vector<std::vector<int>> subgroup;  // exponent vectors of the characters in H
  std::vector<Label> annihilator;          // K_H
  ClosureReport table;
  bool normal = true;
};

/// One entry per subgroup H of the character group of K, ordered by |H| then lexicographically.
/// Throws ErrorKind::Inconsistent if the anti-monotonicity check fails.
std::vector<GaloisEntry> galois_lattice(const Category& cat, std::span<const Label> S, Tolerance tol = {});

/// True iff every sector of `coarse` splits over sectors of `fine` (fine closes by a larger K)
/// with the same twist and an integral dimension ratio.
bool refines(const ClosureReport& fine, const ClosureReport& coarse, Tolerance tol = {});

}  // namespace tcat
