#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcat/abelian_group.hpp"
#include "tcat/numerics.hpp"

namespace tcat {

/// Index of a simple object in its ring's label list. The unit is always 0.
using Label = int;

struct FusionTriple {
  Label a = 0;
  Label b = 0;
  Label c = 0;
  int multiplicity = 1;
};

struct Channel {
  Label label = 0;
  int multiplicity = 0;
};

/// Grothendieck data of a fusion category. Multiplicities are stored
/// sparsely as the list of channels of every ordered pair (a, b).
class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::vector<std::string> names, std::vector<Label> dual, const std::vector<FusionTriple>& triples);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Label a) const { return names_.at(static_cast<std::size_t>(a)); }
  std::optional<Label> find(const std::string& name) const;
  Label lookup(const std::string& name) const;  // throws on unknown names
  Label dual(Label a) const { return dual_.at(static_cast<std::size_t>(a)); }

  int N(Label a, Label b, Label c) const;
  std::span<const Channel> channels(Label a, Label b) const;
  std::vector<FusionTriple> triples() const;

  /// The unique c with a (x) b = c, if the product is a single simple with multiplicity 1.
  std::optional<Label> simple_product(Label a, Label b) const;
  bool multiplicity_free() const;
  std::string describe(std::span<const Label> labels) const;

 private:
  std::vector<std::string> names_;
  std::vector<Label> dual_;
  std::vector<std::vector<Channel>> channels_;  // index a * rank + b
};

struct RingIssue {
  std::string axiom;
  std::vector<Label> witness;
  std::string detail;
};

struct RingReport {
  std::vector<RingIssue> failures;
  bool ok() const { return failures.empty(); }
};

RingReport validate_ring(const FusionRing& ring);

/// Frobenius-Perron dimensions by power iteration on the sum of all fusion matrices.
std::vector<double> fp_dims(const FusionRing& ring, Tolerance tol = {});

/// Labels a with a (x) dual(a) = 1; cross-checked against d_a < 1 + eps.
std::vector<Label> invertibles(const FusionRing& ring, std::span<const double> dims, Tolerance tol = {});

/// Abelian group formed by a set of invertible labels under fusion.
class GroupTable {
 public:
  GroupTable() = default;
  GroupTable(std::vector<Label> labels, FiniteAbelianGroup group);

  const std::vector<Label>& labels() const { return labels_; }
  const FiniteAbelianGroup& group() const { return group_; }
  int order() const { return group_.order(); }
  Label label(int element) const { return labels_.at(static_cast<std::size_t>(element)); }
  std::optional<int> element(Label label) const;
  bool contains(Label label) const { return element(label).has_value(); }
  Label mul(Label a, Label b) const;

 private:
  std::vector<Label> labels_;  // element i of group_ is labels_[i]; labels_[0] is the unit
  FiniteAbelianGroup group_;
};

GroupTable group_structure(const FusionRing& ring, std::span<const Label> subset);

}  // namespace tcat
