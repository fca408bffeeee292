#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tcat/abelian_group.hpp"
#include "tcat/category.hpp"
#include "tcat/groups.hpp"

namespace tcat {

/// Rep(G) with fusion from characters, trivial twists and F/R-symbols from numerically
/// extracted Clebsch-Gordan isometries. Throws ErrorKind::OutOfScope if some fusion
/// multiplicity exceeds one.
Category build_rep_category(const GroupIrreps& g, const std::string& name);

/// Pointed braided category on an abelian group whose element i is label i.
/// omega(a, b, c) is F^{abc}, r(a, b) is R^{ab}; twists are r(a, a).
Category build_pointed(const std::string& name, const std::vector<std::string>& labels, const FiniteAbelianGroup& group,
                       const std::function<Amplitude(int, int, int)>& omega,
                       const std::function<Amplitude(int, int)>& r);

Category ising_category();

/// Deligne product; label "x.y" is index i * rank(second) + j.
Category deligne_product(const Category& first, const Category& second, const std::string& name);

std::vector<std::string> catalog_names();
/// Known names plus repZ<n> for 1 <= n <= 12; unknown names throw ErrorKind::InvalidArgument.
Category catalog_get(const std::string& name);
/// Group and irreps behind a rep* catalog entry; label i is irrep i.
GroupIrreps catalog_group(const std::string& name);

/// Labels of the one-dimensional irreps trivial on the normal subgroup n.
std::vector<int> irreps_trivial_on(const GroupIrreps& g, const std::vector<int>& n);
/// Intersection of the kernels of the given one-dimensional irreps.
std::vector<int> common_kernel(const GroupIrreps& g, const std::vector<int>& labels);

struct RestrictionSector {
  std::size_t orbit = 0;  // index into RestrictionTable::orbits
  double dim = 1;
  int multiplicity = 1;
};

/// Expected closure sector table from restricting the irreps of G to N.
struct RestrictionTable {
  std::vector<std::vector<int>> orbits;          // G-irreps grouped by shared constituents
  std::vector<RestrictionSector> sectors;        // one per irrep of N
  std::vector<std::vector<int>> branching;       // [G-irrep][N-irrep]
  std::vector<int> coset_representatives;        // smallest element of each coset of N
  std::vector<std::vector<std::size_t>> galois_action;  // per coset: permutation of sectors by conjugation
};

/// N must be normal and either abelian or all of G.
RestrictionTable restriction_oracle(const GroupIrreps& g, const std::vector<int>& n);

}  // namespace tcat
