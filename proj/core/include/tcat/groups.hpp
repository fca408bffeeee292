#pragma once

#include <string>
#include <vector>

#include "tcat/numerics.hpp"

namespace tcat {

/// Finite group as a multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool is_subgroup(const std::vector<int>& elements) const;
  bool is_normal(const std::vector<int>& elements) const;
  /// Commutator subgroup [G, G].
  std::vector<int> derived_subgroup() const;

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

/// Unitary irrep given by one matrix per group element.
struct MatrixIrrep {
  std::string name;
  std::vector<Matrix> images;

  int degree() const { return static_cast<int>(images.front().rows()); }
  Scalar character(int g) const { return images.at(static_cast<std::size_t>(g)).trace(); }
};

/// A group together with a complete list of its irreps, the trivial one first.
struct GroupIrreps {
  FiniteGroup group;
  std::vector<MatrixIrrep> irreps;
};

/// Closes generator images of a faithful unitary representation into a group table, then
/// extends each irrep (given on the same generators) along the enumeration words. Every irrep
/// is checked for the homomorphism property, unitarity and character norm 1, and the list for
/// completeness (sum of squared degrees = |G|).
GroupIrreps group_from_generators(const std::string& name, const std::vector<Matrix>& faithful,
                                  const std::vector<std::pair<std::string, std::vector<Matrix>>>& irreps);

GroupIrreps symmetric_group_s3();
GroupIrreps dihedral_group_d4();
GroupIrreps quaternion_group_q8();
GroupIrreps cyclic_group(int n);

/// Characters of a subgroup given by its elements, for abelian subgroups (one per irrep).
std::vector<std::vector<Scalar>> abelian_subgroup_characters(const FiniteGroup& g, const std::vector<int>& elements);

}  // namespace tcat
