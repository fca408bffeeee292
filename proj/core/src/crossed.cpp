#include "tcat/crossed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tcat/error.hpp"

namespace tcat {

namespace {

bool is_square(int n, int& root) {
  root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  return root * root == n;
}

}  // namespace

TransparentInput make_transparent_input(const PremodularData& data, std::span<const Label> labels, Tolerance tol) {
  const FusionRing& ring = data.ring;
  std::vector<Label> subset(labels.begin(), labels.end());
  if (std::find(subset.begin(), subset.end(), 0) == subset.end()) subset.push_back(0);
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());

  for (Label a : subset) {
    if (a < 0 || a >= ring.rank()) fail(ErrorKind::InvalidArgument, "label index out of range");
    if (ring.simple_product(a, ring.dual(a)) != std::optional<Label>(0)) {
      fail(ErrorKind::OutOfScope, "label " + ring.name(a) +
                                      " is not invertible; only pointed transparent subcategories are supported");
    }
  }
  const std::vector<Label> center = transparent_simples(data, tol);
  for (Label a : subset) {
    if (!std::binary_search(center.begin(), center.end(), a)) {
      fail(ErrorKind::OutOfScope, "label " + ring.name(a) +
                                      " is not transparent; compute mutually_transparent(S) and close that "
                                      "subcategory instead");
    }
  }
  const CenterSplit split = split_center(data, tol);
  for (Label a : subset) {
    if (std::find(split.fermions.begin(), split.fermions.end(), a) != split.fermions.end()) {
      fail(ErrorKind::OutOfScope, "label " + ring.name(a) +
                                      " is a transparent fermion; super-closures are not constructed, use the "
                                      "bosonic sub-center " + ring.describe(split.bosons));
    }
  }
  TransparentInput in;
  in.K = group_structure(ring, subset);
  in.characters = in.K.group().characters();
  return in;
}

CrossedMorphism operator+(const CrossedMorphism& f, const CrossedMorphism& g) {
  if (f.source != g.source || f.target != g.target) fail(ErrorKind::InvalidArgument, "sum of morphisms in different Hom spaces");
  CrossedMorphism out = f;
  for (const auto& [k, v] : g.coeff) out.coeff[k] += v;
  return out;
}

CrossedMorphism operator*(Scalar s, const CrossedMorphism& f) {
  CrossedMorphism out = f;
  for (auto& [k, v] : out.coeff) v *= s;
  return out;
}

double max_abs(const CrossedMorphism& f) {
  double m = 0;
  for (const auto& [k, v] : f.coeff) m = std::max(m, std::abs(v));
  return m;
}

double distance(const CrossedMorphism& f, const CrossedMorphism& g) {
  if (f.source != g.source || f.target != g.target) return std::numeric_limits<double>::infinity();
  return max_abs(f + (-1.0) * g);
}

CrossedCalculus::CrossedCalculus(SkeletalData sk, TransparentInput input, Tolerance tol)
    : sk_(std::move(sk)), input_(std::move(input)), tol_(tol) {
  const auto& labels = input_.K.labels();
  for (Label k : labels) {
    for (Label l : labels) {
      const Label kl = input_.K.mul(k, l);
      if (!near(sk_.R(k, l, kl), Scalar(1.0), tol_)) {
        fail(ErrorKind::OutOfScope, "R-symbols on the transparent subgroup are not in the trivial gauge (R[" +
                                        ring().name(k) + "," + ring().name(l) + "])");
      }
      for (Label n : labels) {
        const Label ln = input_.K.mul(l, n);
        if (!near(sk_.F(k, l, n, input_.K.mul(kl, n), kl, ln), Scalar(1.0), tol_)) {
          fail(ErrorKind::OutOfScope, "F-symbols on the transparent subgroup are not in the trivial gauge (F[" +
                                          ring().name(k) + "," + ring().name(l) + "," + ring().name(n) + "])");
        }
      }
    }
  }
}

Scalar CrossedCalculus::F(Label a, Label b, Label c, Label d, Label e, Label f) const {
  const FKey key{a, b, c, d, e, f};
  return sk_.admissible(key) ? sk_.F(a, b, c, d, e, f) : Scalar(0.0);
}

Label CrossedCalculus::act(Label k, Label rho) const {
  auto p = ring().simple_product(k, rho);
  if (!p) fail(ErrorKind::InvalidArgument, "label " + ring().name(k) + " does not act invertibly");
  return *p;
}

HomSpace CrossedCalculus::hom_space(Label rho, Label sigma) const {
  HomSpace h;
  for (Label k : K().labels()) {
    if (act(k, rho) == sigma) h.support.push_back(k);
  }
  h.dimension = static_cast<int>(h.support.size());
  return h;
}

CrossedMorphism CrossedCalculus::zero(Label rho, Label sigma) const { return CrossedMorphism{rho, sigma, {}}; }

CrossedMorphism CrossedCalculus::identity(Label rho) const { return CrossedMorphism{rho, rho, {{0, Scalar(1.0)}}}; }

CrossedMorphism CrossedCalculus::basis(Label k, Label rho) const {
  if (!K().contains(k)) fail(ErrorKind::InvalidArgument, "label " + ring().name(k) + " is not in K");
  return CrossedMorphism{rho, act(k, rho), {{k, Scalar(1.0)}}};
}

CrossedMorphism CrossedCalculus::compose(const CrossedMorphism& f, const CrossedMorphism& g) const {
  if (g.target != f.source) fail(ErrorKind::InvalidArgument, "composition of non-composable morphisms");
  const Label rho = g.source, sigma = g.target, delta = f.target;
  CrossedMorphism out{rho, delta, {}};
  for (const auto& [k, fk] : f.coeff) {
    for (const auto& [l, gl] : g.coeff) {
      const Label m = K().mul(k, l);
      out.coeff[m] += fk * gl * F(k, l, rho, delta, m, sigma);
    }
  }
  return out;
}

CrossedMorphism CrossedCalculus::tensor(const CrossedMorphism& f, const CrossedMorphism& g, Label source_channel,
                                        Label target_channel) const {
  const Label r1 = f.source, s1 = f.target, r2 = g.source, s2 = g.target;
  if (ring().N(r1, r2, source_channel) == 0 || ring().N(s1, s2, target_channel) == 0) {
    fail(ErrorKind::InvalidArgument, "tensor channel is not a constituent of the product");
  }
  CrossedMorphism out{source_channel, target_channel, {}};
  for (const auto& [k, fk] : f.coeff) {
    for (const auto& [l, gl] : g.coeff) {
      const Label m = K().mul(k, l);
      if (ring().N(m, source_channel, target_channel) == 0) continue;
      const Label u = act(l, r1);
      const Label z = act(m, r1);
      const Scalar x = std::conj(std::conj(F(s1, l, r2, target_channel, z, s2)) * F(k, r1, l, z, s1, u) *
                                 std::conj(sk_.R(r1, l, u)) * std::conj(F(k, l, r1, z, m, u)) *
                                 F(m, r1, r2, target_channel, z, source_channel));
      out.coeff[m] += fk * gl * x;
    }
  }
  return out;
}

CrossedMorphism CrossedCalculus::tensor(const CrossedMorphism& f, const CrossedMorphism& g) const {
  auto src = ring().simple_product(f.source, g.source);
  auto tgt = ring().simple_product(f.target, g.target);
  if (!src || !tgt) fail(ErrorKind::InvalidArgument, "tensor product target is not simple; name a fusion channel");
  return tensor(f, g, *src, *tgt);
}

CrossedMorphism CrossedCalculus::star(const CrossedMorphism& f) const {
  const Label rho = f.source, sigma = f.target;
  CrossedMorphism out{sigma, rho, {}};
  for (const auto& [k, fk] : f.coeff) {
    const Label kbar = ring().dual(k);
    out.coeff[kbar] += std::conj(fk) * std::conj(F(kbar, k, rho, rho, 0, sigma));
  }
  return out;
}

CrossedMorphism CrossedCalculus::alpha(const Character& g, const CrossedMorphism& f) const {
  CrossedMorphism out = f;
  for (auto& [k, v] : out.coeff) v *= g(*K().element(k)).value();
  return out;
}

EndAlgebra CrossedCalculus::end_algebra(Label rho, std::span<const Scalar> gauge) const {
  EndAlgebra alg;
  alg.base = rho;
  alg.stabilizer = hom_space(rho, rho).support;
  const std::size_t n = alg.stabilizer.size();
  if (!gauge.empty() && gauge.size() != n) fail(ErrorKind::InvalidArgument, "gauge size differs from |K_rho|");
  alg.gauge.assign(n, Scalar(1.0));
  if (!gauge.empty()) std::copy(gauge.begin(), gauge.end(), alg.gauge.begin());
  if (std::abs(alg.gauge[0] - 1.0) > tol_.eps) fail(ErrorKind::InvalidArgument, "T_1 must stay the identity");

  std::map<Label, Scalar> u;
  for (std::size_t i = 0; i < n; ++i) u[alg.stabilizer[i]] = alg.gauge[i];
  auto U = [&](Label k) { return u.at(k) * basis(k, rho); };

  for (Label k : alg.stabilizer) {
    for (Label l : alg.stabilizer) {
      const Label kl = K().mul(k, l);
      alg.cocycle[{k, l}] = compose(U(k), U(l)).coeff.at(kl) / u.at(kl);
    }
  }
  for (Label k : alg.stabilizer) {
    for (Label l : alg.stabilizer) {
      for (Label m : alg.stabilizer) {
        const Scalar lhs = alg.cocycle.at({k, l}) * alg.cocycle.at({K().mul(k, l), m});
        const Scalar rhs = alg.cocycle.at({k, K().mul(l, m)}) * alg.cocycle.at({l, m});
        alg.cocycle_defect = std::max(alg.cocycle_defect, std::abs(lhs - rhs));
      }
    }
  }
  if (alg.cocycle_defect > tol_.eps) {
    fail(ErrorKind::Numerical, "endomorphism cocycle of " + ring().name(rho) + " violates the 2-cocycle law");
  }

  for (Label k : alg.stabilizer) {
    for (Label l : alg.stabilizer) {
      const Scalar b = alg.cocycle.at({k, l}) / alg.cocycle.at({l, k});
      auto p = ExactPhase::recognize(b, static_cast<long>(n), tol_);
      if (!p) fail(ErrorKind::Numerical, "commutator of the cocycle is not a root of unity of order dividing |K_rho|");
      alg.beta[{k, l}] = *p;
    }
  }
  for (Label k : alg.stabilizer) {
    bool central = true;
    for (Label l : alg.stabilizer) central = central && alg.beta.at({k, l}).is_one();
    if (central) alg.radical.push_back(k);
  }
  const int quotient = static_cast<int>(n / alg.radical.size());
  if (!is_square(quotient, alg.multiplicity)) {
    fail(ErrorKind::Inconsistent, "|K_rho|/|L_rho| is not a perfect square for " + ring().name(rho));
  }

  alg.radical_group = group_structure(ring(), alg.radical);
  alg.radical_characters = alg.radical_group.group().characters();
  const FiniteAbelianGroup& L = alg.radical_group.group();

  // Rescale U on a basis of L so that the restricted cocycle becomes trivial.
  std::vector<CrossedMorphism> gens;
  for (std::size_t i = 0; i < L.basis().size(); ++i) {
    const Label g = alg.radical_group.label(L.basis()[i]);
    const int order = L.basis_orders()[i];
    CrossedMorphism power = identity(rho);
    for (int j = 0; j < order; ++j) power = compose(U(g), power);
    const Scalar mu = power.coeff.at(0);
    const Scalar lambda = std::polar(std::pow(std::abs(mu), -1.0 / order), -std::arg(mu) / order);
    gens.push_back(lambda * U(g));
  }
  std::vector<CrossedMorphism> trivialised;
  for (int e = 0; e < L.order(); ++e) {
    const std::vector<int> x = L.coordinates(e);
    CrossedMorphism v = identity(rho);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (int j = 0; j < x[i]; ++j) v = compose(gens[i], v);
    }
    trivialised.push_back(v);
  }
  const double scale = 1.0 / static_cast<double>(L.order());
  for (const Character& chi : alg.radical_characters) {
    CrossedMorphism p = zero(rho, rho);
    for (int e = 0; e < L.order(); ++e) p = p + (scale * chi(e).value()) * trivialised[static_cast<std::size_t>(e)];
    alg.projections.push_back(p);
  }

  CrossedMorphism total = zero(rho, rho);
  for (std::size_t i = 0; i < alg.projections.size(); ++i) {
    const CrossedMorphism& p = alg.projections[i];
    total = total + p;
    for (std::size_t j = 0; j < alg.projections.size(); ++j) {
      const CrossedMorphism pq = compose(p, alg.projections[j]);
      alg.projection_defect = std::max(alg.projection_defect, i == j ? distance(pq, p) : max_abs(pq));
    }
    for (Label k : alg.stabilizer) {
      alg.projection_defect = std::max(alg.projection_defect, distance(compose(p, U(k)), compose(U(k), p)));
    }
  }
  alg.projection_defect = std::max(alg.projection_defect, distance(total, identity(rho)));
  if (alg.projection_defect > tol_.eps) {
    fail(ErrorKind::Numerical, "central projections of " + ring().name(rho) + " fail their identities");
  }
  return alg;
}

BlockStructure block_structure(const CrossedCalculus& calc, const EndAlgebra& alg) {
  const Tolerance tol = calc.tolerance();
  const auto& stab = alg.stabilizer;
  const auto n = static_cast<Eigen::Index>(stab.size());
  std::map<Label, Eigen::Index> index;
  for (Eigen::Index i = 0; i < n; ++i) index[stab[static_cast<std::size_t>(i)]] = i;
  auto vec = [&](const CrossedMorphism& f) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    for (const auto& [k, c] : f.coeff) v(index.at(k)) += c;
    return v;
  };
  std::vector<CrossedMorphism> U;
  for (Label k : stab) U.push_back(calc.basis(k, alg.base));

  BlockStructure out;
  out.algebra_dim = static_cast<int>(n);
  out.matrix_size = alg.multiplicity;

  Matrix commutators(n * n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const auto& uk = U[static_cast<std::size_t>(k)];
      const auto& ul = U[static_cast<std::size_t>(l)];
      commutators.block(l * n, k, n, 1) = vec(calc.compose(uk, ul)) - vec(calc.compose(ul, uk));
    }
  }
  const Matrix center = null_space(commutators, tol);
  out.center_dim = static_cast<int>(center.cols());

  for (const CrossedMorphism& p : alg.projections) {
    Matrix span(n, n);
    for (Eigen::Index k = 0; k < n; ++k) span.col(k) = vec(calc.compose(p, U[static_cast<std::size_t>(k)]));
    out.block_dims.push_back(rank(span, tol));
    Matrix zspan(n, std::max<Eigen::Index>(center.cols(), 1));
    zspan.setZero();
    for (Eigen::Index j = 0; j < center.cols(); ++j) {
      CrossedMorphism z = calc.zero(alg.base, alg.base);
      for (Eigen::Index k = 0; k < n; ++k) z.coeff[stab[static_cast<std::size_t>(k)]] = center(k, j);
      zspan.col(j) = vec(calc.compose(p, z));
    }
    out.block_center_dims.push_back(rank(zspan, tol));
  }

  const int n2 = alg.multiplicity * alg.multiplicity;
  out.ok = out.center_dim == static_cast<int>(alg.radical.size()) &&
           out.block_dims.size() == alg.radical.size() &&
           std::all_of(out.block_dims.begin(), out.block_dims.end(), [&](int d) { return d == n2; }) &&
           std::all_of(out.block_center_dims.begin(), out.block_center_dims.end(), [](int d) { return d == 1; });
  return out;
}

BraidingLift braiding_lift_check(const SkeletalData& sk, std::span<const Label> subset, Tolerance tol) {
  const FusionRing& ring = sk.ring();
  BraidingLift out;
  for (Label k : subset) {
    if (ring.simple_product(k, ring.dual(k)) != std::optional<Label>(0)) {
      fail(ErrorKind::InvalidArgument, "label " + ring.name(k) + " is not invertible");
    }
  }
  for (Label k : subset) {
    for (Label rho = 0; rho < ring.rank(); ++rho) {
      for (const Channel& c : ring.channels(k, rho)) {
        const double defect = std::abs(sk.R(rho, k, c.label) * sk.R(k, rho, c.label) - 1.0);
        if (defect > tol.eps) {
          out.lifts = false;
          out.witness = LiftWitness{k, rho, c.label, defect};
          return out;
        }
      }
    }
  }
  return out;
}

Subobject idempotent_complete(const CrossedCalculus& calc, const CrossedMorphism& e) {
  const double eps = calc.tolerance().eps;
  if (e.source != e.target) fail(ErrorKind::InvalidArgument, "an idempotent must be an endomorphism");
  if (distance(calc.compose(e, e), e) > eps) fail(ErrorKind::InvalidArgument, "morphism is not idempotent");
  if (distance(calc.star(e), e) > eps) fail(ErrorKind::InvalidArgument, "idempotent is not self-adjoint");
  return Subobject{e.source, e, max_abs(e) <= eps};
}

int hom_dimension(const CrossedCalculus& calc, const Subobject& a, const Subobject& b) {
  if (a.zero || b.zero) return 0;
  const HomSpace h = calc.hom_space(a.object, b.object);
  if (h.dimension == 0) return 0;
  std::map<Label, Eigen::Index> index;
  for (std::size_t i = 0; i < h.support.size(); ++i) index[h.support[i]] = static_cast<Eigen::Index>(i);
  Matrix images = Matrix::Zero(h.dimension, h.dimension);
  for (std::size_t j = 0; j < h.support.size(); ++j) {
    const CrossedMorphism x = calc.basis(h.support[j], a.object);
    const CrossedMorphism y = calc.compose(b.idempotent, calc.compose(x, a.idempotent));
    for (const auto& [k, c] : y.coeff) images(index.at(k), static_cast<Eigen::Index>(j)) += c;
  }
  return rank(images, calc.tolerance());
}

}  // namespace tcat
