#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tcat/abelian_group.hpp"
#include "tcat/fusion_ring.hpp"
#include "tcat/premodular.hpp"
#include "tcat/skeletal.hpp"

namespace tcat {

/// A pointed transparent bosonic subcategory: its group of labels K and the character group of K.
struct TransparentInput {
  GroupTable K;
  std::vector<Character> characters;  // lexicographic in exponents against K's basis
};

/// Validates `labels` as invertible, transparent and bosonic, in that order.
/// Each failure is an ErrorKind::OutOfScope error naming the offending label.
TransparentInput make_transparent_input(const PremodularData& data, std::span<const Label> labels,
                                        Tolerance tol = {});

/// Morphism source -> target of the crossed product, as coefficients against the
/// basis B^k = (vertex k (x) source -> target) (x) psi_k, keyed by the label k.
struct CrossedMorphism {
  Label source = 0;
  Label target = 0;
  std::map<Label, Scalar> coeff;
};

CrossedMorphism operator+(const CrossedMorphism& f, const CrossedMorphism& g);
CrossedMorphism operator*(Scalar s, const CrossedMorphism& f);
double max_abs(const CrossedMorphism& f);
double distance(const CrossedMorphism& f, const CrossedMorphism& g);

struct HomSpace {
  int dimension = 0;
  std::vector<Label> support;
};

struct EndAlgebra {
  Label base = 0;
  std::vector<Label> stabilizer;  // K_rho in K element order
  std::vector<Scalar> gauge;      // phase u_k multiplying T_k, aligned with stabilizer
  std::map<std::pair<Label, Label>, Scalar> cocycle;
  std::map<std::pair<Label, Label>, ExactPhase> beta;
  std::vector<Label> radical;  // L_rho
  GroupTable radical_group;
  std::vector<Character> radical_characters;
  std::vector<CrossedMorphism> projections;  // one per radical character
  int multiplicity = 1;                      // N_rho
  double cocycle_defect = 0;
  double projection_defect = 0;
};

/// Morphism calculus of the crossed product by a pointed transparent subcategory.
///
/// The K-labels must carry trivial F- and R-symbols among themselves; other
/// gauges throw ErrorKind::OutOfScope at construction.
class CrossedCalculus {
 public:
  CrossedCalculus(SkeletalData sk, TransparentInput input, Tolerance tol = {});

  const SkeletalData& skeletal() const { return sk_; }
  const FusionRing& ring() const { return sk_.ring(); }
  const TransparentInput& input() const { return input_; }
  const GroupTable& K() const { return input_.K; }
  Tolerance tolerance() const { return tol_; }

  /// gamma_k (x) rho for k in K.
  Label act(Label k, Label rho) const;

  HomSpace hom_space(Label rho, Label sigma) const;
  CrossedMorphism zero(Label rho, Label sigma) const;
  CrossedMorphism identity(Label rho) const;
  CrossedMorphism basis(Label k, Label rho) const;

  CrossedMorphism compose(const CrossedMorphism& f, const CrossedMorphism& g) const;

  /// f (x) g restricted to the channel source_channel of f.source (x) g.source
  /// and target_channel of f.target (x) g.target.
  CrossedMorphism tensor(const CrossedMorphism& f, const CrossedMorphism& g, Label source_channel,
                         Label target_channel) const;
  /// Same, for factors whose products are simple; otherwise throws ErrorKind::InvalidArgument.
  CrossedMorphism tensor(const CrossedMorphism& f, const CrossedMorphism& g) const;

  CrossedMorphism star(const CrossedMorphism& f) const;
  CrossedMorphism alpha(const Character& g, const CrossedMorphism& f) const;

  /// Endomorphism algebra of rho with T_k regauged by gauge[i] (aligned with the stabilizer; empty = all 1).
  EndAlgebra end_algebra(Label rho, std::span<const Scalar> gauge = {}) const;

 private:
  Scalar F(Label a, Label b, Label c, Label d, Label e, Label f) const;

  SkeletalData sk_;
  TransparentInput input_;
  Tolerance tol_;
};

/// Wedderburn data of an endomorphism algebra, computed from the calculus.
struct BlockStructure {
  int algebra_dim = 0;
  int center_dim = 0;
  int matrix_size = 1;
  std::vector<int> block_dims;
  std::vector<int> block_center_dims;
  bool ok = false;  // center_dim = |L|, every block has dimension N^2 and a one-dimensional center
};

BlockStructure block_structure(const CrossedCalculus& calc, const EndAlgebra& alg);

struct LiftWitness {
  Label k = 0;
  Label rho = 0;
  Label channel = 0;
  double defect = 0;  // |R^{rho k}_c R^{k rho}_c - 1|
};

struct BraidingLift {
  bool lifts = true;
  std::optional<LiftWitness> witness;
};

/// The braiding lifts to the crossed product iff every k in `subset` has trivial
/// monodromy with every simple; the first failure is returned as witness.
BraidingLift braiding_lift_check(const SkeletalData& sk, std::span<const Label> subset, Tolerance tol = {});

/// Subobject (object, E) of the idempotent completion.
struct Subobject {
  Label object = 0;
  CrossedMorphism idempotent;
  bool zero = false;
};

/// Requires E o E = E and E* = E within tolerance.
Subobject idempotent_complete(const CrossedCalculus& calc, const CrossedMorphism& e);

/// dim Hom((rho, E), (sigma, F)) = rank of X -> F o X o E on Hom(rho, sigma).
int hom_dimension(const CrossedCalculus& calc, const Subobject& a, const Subobject& b);

}  // namespace tcat
