#pragma once

#include <vector>

#include "tcat/numerics.hpp"

namespace tcat {

/// Character of a finite abelian group, stored as exponents against the
/// group's fixed basis together with its exact values on every element.
struct Character {
  std::vector<int> exponents;
  std::vector<ExactPhase> values;  // indexed by group element

  ExactPhase operator()(int element) const { return values.at(static_cast<std::size_t>(element)); }
  bool is_trivial() const;
};

/// Finite abelian group on elements 0..n-1 with identity 0. Construction
/// checks the group axioms and commutativity exhaustively.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::vector<int>>{{0}}) {}
  explicit FiniteAbelianGroup(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const;

  /// Generators g_1..g_r with every element uniquely prod g_i^{x_i}, 0 <= x_i < ord(g_i).
  const std::vector<int>& basis() const { return basis_; }
  const std::vector<int>& basis_orders() const { return basis_orders_; }
  std::vector<int> coordinates(int element) const { return coords_[element]; }
  int from_coordinates(const std::vector<int>& x) const;
  bool is_cyclic() const { return basis_.size() <= 1; }

  /// All characters, in lexicographic order of their exponent vectors.
  std::vector<Character> characters() const;
  Character character(const std::vector<int>& exponents) const;

  /// Element subsets (sorted) of every subgroup, ordered by size then lexicographically.
  std::vector<std::vector<int>> subgroups() const;
  std::vector<int> generated(const std::vector<int>& gens) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> basis_;
  std::vector<int> basis_orders_;
  std::vector<std::vector<int>> coords_;
};

}  // namespace tcat
