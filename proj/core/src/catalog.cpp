#include "tcat/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "tcat/error.hpp"

namespace tcat {

namespace {

constexpr double kProjectionThreshold = 1e-10;

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/// Permutation C^{nb} (x) C^{na} -> C^{na} (x) C^{nb}.
Matrix swap(Eigen::Index na, Eigen::Index nb) {
  Matrix t = Matrix::Zero(na * nb, nb * na);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < nb; ++j) t(i * nb + j, j * na + i) = 1.0;
  }
  return t;
}

/// Isometry C^{nc} -> C^{na} (x) C^{nb} intertwining c with a (x) b, by group averaging.
Matrix cg_isometry(const GroupIrreps& g, int a, int b, int c) {
  const auto& ia = g.irreps[static_cast<std::size_t>(a)];
  const auto& ib = g.irreps[static_cast<std::size_t>(b)];
  const auto& ic = g.irreps[static_cast<std::size_t>(c)];
  const Eigen::Index rows = ia.degree() * ib.degree(), nc = ic.degree();
  const int order = g.group.order();
  std::vector<Matrix> ab;
  for (int x = 0; x < order; ++x) ab.push_back(kron(ia.images[x], ib.images[x]));
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < nc; ++j) {
      Matrix avg = Matrix::Zero(rows, nc);
      for (int x = 0; x < order; ++x) avg += ab[x].col(i) * ic.images[x].col(j).adjoint();
      avg /= static_cast<double>(order);
      if (avg.norm() <= kProjectionThreshold) continue;
      const double scale = (avg.adjoint() * avg).trace().real() / static_cast<double>(nc);
      Matrix v = avg / std::sqrt(scale);
      for (Eigen::Index p = 0; p < v.rows(); ++p) {
        for (Eigen::Index q = 0; q < v.cols(); ++q) {
          if (std::abs(v(p, q)) > kProjectionThreshold) {
            const Scalar phase = v(p, q) / std::abs(v(p, q));
            return v / phase;
          }
        }
      }
    }
  }
  fail(ErrorKind::Numerical, "no intertwiner found for an admissible fusion channel");
}

Amplitude stored_f(const SkeletalData& sk, const FKey& k) {
  auto it = sk.f_symbols().find(k);
  if (it != sk.f_symbols().end()) return it->second;
  return Amplitude(ExactPhase(0, 1));
}

bool is_exact_one(const Amplitude& a) { return a.exact ? a.exact->is_one() : a.value == Scalar(1.0); }

}  // namespace

Category build_rep_category(const GroupIrreps& g, const std::string& name) {
  const int n = static_cast<int>(g.irreps.size());
  const int order = g.group.order();
  auto inner = [&](auto&& chi) {
    Scalar s = 0;
    for (int x = 0; x < order; ++x) s += chi(x);
    return s / static_cast<double>(order);
  };
  std::vector<std::string> names;
  std::vector<Label> dual(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    names.push_back(g.irreps[a].name);
    for (int b = 0; b < n; ++b) {
      const Scalar overlap = inner([&](int x) { return g.irreps[a].character(x) * g.irreps[b].character(x); });
      if (std::abs(overlap - 1.0) < 1e-9) dual[a] = b;
    }
  }
  std::vector<FusionTriple> triples;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const Scalar m = inner([&](int x) {
          return g.irreps[a].character(x) * g.irreps[b].character(x) * std::conj(g.irreps[c].character(x));
        });
        const int mult = static_cast<int>(std::lround(m.real()));
        if (mult > 1) fail(ErrorKind::OutOfScope, "group " + g.group.name() + " has fusion multiplicities above one");
        if (mult == 1) triples.push_back({a, b, c, 1});
      }
    }
  }
  FusionRing ring(names, dual, triples);

  std::map<std::tuple<int, int, int>, Matrix> V;
  for (const FusionTriple& t : triples) V[{t.a, t.b, t.c}] = cg_isometry(g, t.a, t.b, t.c);
  auto deg = [&](int a) { return static_cast<Eigen::Index>(g.irreps[a].degree()); };

  std::map<FKey, Amplitude> f;
  for_each_admissible_f(ring, [&](const FKey& k) {
    const Matrix left = kron(V.at({k.a, k.b, k.e}), Matrix::Identity(deg(k.c), deg(k.c))) * V.at({k.e, k.c, k.d});
    const Matrix right = kron(Matrix::Identity(deg(k.a), deg(k.a)), V.at({k.b, k.c, k.f})) * V.at({k.a, k.f, k.d});
    f.emplace(k, Amplitude((right.adjoint() * left).trace() / static_cast<double>(deg(k.d))));
  });
  std::map<RKey, Amplitude> r;
  for (const FusionTriple& t : triples) {
    const Matrix& vab = V.at({t.a, t.b, t.c});
    const Matrix& vba = V.at({t.b, t.a, t.c});
    r.emplace(RKey{t.a, t.b, t.c},
              Amplitude((vab.adjoint() * swap(deg(t.a), deg(t.b)) * vba).trace() / static_cast<double>(deg(t.c))));
  }

  Category cat;
  cat.name = name;
  cat.data = make_premodular(ring, std::vector<Amplitude>(static_cast<std::size_t>(n), Amplitude(ExactPhase(0, 1))));
  cat.skeletal = SkeletalData(ring, std::move(f), std::move(r), false);
  cat.conventions = Conventions{false, false};
  return cat;
}

Category build_pointed(const std::string& name, const std::vector<std::string>& labels, const FiniteAbelianGroup& group,
                       const std::function<Amplitude(int, int, int)>& omega,
                       const std::function<Amplitude(int, int)>& r) {
  const int n = group.order();
  if (static_cast<int>(labels.size()) != n) fail(ErrorKind::InvalidArgument, "label count differs from group order");
  std::vector<Label> dual;
  std::vector<FusionTriple> triples;
  for (int a = 0; a < n; ++a) {
    dual.push_back(group.inverse(a));
    for (int b = 0; b < n; ++b) triples.push_back({a, b, group.mul(a, b), 1});
  }
  FusionRing ring(labels, dual, triples);
  std::map<FKey, Amplitude> f;
  std::map<RKey, Amplitude> rs;
  std::vector<Amplitude> twists;
  for (int a = 0; a < n; ++a) {
    twists.push_back(r(a, a));
    for (int b = 0; b < n; ++b) {
      rs.emplace(RKey{a, b, group.mul(a, b)}, r(a, b));
      for (int c = 0; c < n; ++c) {
        const Amplitude w = omega(a, b, c);
        if (!is_exact_one(w)) f.emplace(FKey{a, b, c, group.mul(group.mul(a, b), c), group.mul(a, b), group.mul(b, c)}, w);
      }
    }
  }
  Category cat;
  cat.name = name;
  cat.data = make_premodular(ring, twists);
  cat.skeletal = SkeletalData(ring, std::move(f), std::move(rs), true);
  cat.conventions = Conventions{false, true};
  return cat;
}

Category ising_category() {
  constexpr Label one = 0, psi = 1, sigma = 2;
  FusionRing ring({"1", "f", "sigma"}, {0, 1, 2},
                  {{one, one, one, 1},
                   {one, psi, psi, 1},
                   {one, sigma, sigma, 1},
                   {psi, one, psi, 1},
                   {sigma, one, sigma, 1},
                   {psi, psi, one, 1},
                   {psi, sigma, sigma, 1},
                   {sigma, psi, sigma, 1},
                   {sigma, sigma, one, 1},
                   {sigma, sigma, psi, 1}});
  const double h = 1.0 / std::numbers::sqrt2;
  const Amplitude minus(ExactPhase(1, 2));
  std::map<FKey, Amplitude> f{
      {FKey{sigma, sigma, sigma, sigma, one, one}, Amplitude(Scalar(h))},
      {FKey{sigma, sigma, sigma, sigma, one, psi}, Amplitude(Scalar(h))},
      {FKey{sigma, sigma, sigma, sigma, psi, one}, Amplitude(Scalar(h))},
      {FKey{sigma, sigma, sigma, sigma, psi, psi}, Amplitude(Scalar(-h))},
      {FKey{psi, sigma, psi, sigma, sigma, sigma}, minus},
      {FKey{sigma, psi, sigma, psi, sigma, sigma}, minus},
  };
  const Amplitude unit(ExactPhase(0, 1));
  std::map<RKey, Amplitude> r{
      {RKey{one, one, one}, unit},
      {RKey{one, psi, psi}, unit},
      {RKey{psi, one, psi}, unit},
      {RKey{one, sigma, sigma}, unit},
      {RKey{sigma, one, sigma}, unit},
      {RKey{psi, psi, one}, minus},
      {RKey{psi, sigma, sigma}, Amplitude(ExactPhase(3, 4))},
      {RKey{sigma, psi, sigma}, Amplitude(ExactPhase(3, 4))},
      {RKey{sigma, sigma, one}, Amplitude(ExactPhase(-1, 16))},
      {RKey{sigma, sigma, psi}, Amplitude(ExactPhase(3, 16))},
  };
  Category cat;
  cat.name = "ising";
  cat.data = make_premodular(ring, {unit, minus, Amplitude(ExactPhase(1, 16))});
  cat.skeletal = SkeletalData(ring, std::move(f), std::move(r), true);
  cat.conventions = Conventions{false, true};
  return cat;
}

Category deligne_product(const Category& first, const Category& second, const std::string& name) {
  if (!first.skeletal || !second.skeletal) fail(ErrorKind::InvalidArgument, "Deligne product needs skeletal data on both factors");
  const FusionRing& r1 = first.data.ring;
  const FusionRing& r2 = second.data.ring;
  const int n2 = r2.rank();
  auto pack = [&](Label a, Label b) { return a * n2 + b; };

  std::vector<std::string> names;
  std::vector<Label> dual;
  for (Label a = 0; a < r1.rank(); ++a) {
    for (Label b = 0; b < n2; ++b) {
      names.push_back(r1.name(a) + "." + r2.name(b));
      dual.push_back(pack(r1.dual(a), r2.dual(b)));
    }
  }
  std::vector<FusionTriple> triples;
  for (const FusionTriple& t1 : r1.triples()) {
    for (const FusionTriple& t2 : r2.triples()) {
      triples.push_back({pack(t1.a, t2.a), pack(t1.b, t2.b), pack(t1.c, t2.c), t1.multiplicity * t2.multiplicity});
    }
  }
  std::sort(triples.begin(), triples.end(), [](const FusionTriple& x, const FusionTriple& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
  FusionRing ring(names, dual, triples);

  const SkeletalData& s1 = *first.skeletal;
  const SkeletalData& s2 = *second.skeletal;
  const bool trivial_default = s1.trivial_f_default() && s2.trivial_f_default();
  std::map<FKey, Amplitude> f;
  for_each_admissible_f(ring, [&](const FKey& k) {
    const FKey k1{k.a / n2, k.b / n2, k.c / n2, k.d / n2, k.e / n2, k.f / n2};
    const FKey k2{k.a % n2, k.b % n2, k.c % n2, k.d % n2, k.e % n2, k.f % n2};
    const bool stored = s1.f_symbols().contains(k1) || s2.f_symbols().contains(k2);
    if (stored || !trivial_default) f.emplace(k, stored_f(s1, k1) * stored_f(s2, k2));
  });
  std::map<RKey, Amplitude> r;
  for (const auto& [k1, v1] : s1.r_symbols()) {
    for (const auto& [k2, v2] : s2.r_symbols()) r.emplace(RKey{pack(k1.a, k2.a), pack(k1.b, k2.b), pack(k1.c, k2.c)}, v1 * v2);
  }
  std::vector<Amplitude> twists;
  for (Label a = 0; a < r1.rank(); ++a) {
    for (Label b = 0; b < n2; ++b) twists.push_back(first.data.twists[a] * second.data.twists[b]);
  }
  Category cat;
  cat.name = name;
  cat.data = make_premodular(ring, twists);
  cat.skeletal = SkeletalData(ring, std::move(f), std::move(r), trivial_default);
  cat.conventions = Conventions{false, trivial_default};
  return cat;
}

std::vector<std::string> catalog_names() {
  return {"repS3", "repD4", "repQ8", "repZ2", "repZ3", "repZ4", "semion", "svec", "z4metric", "toric", "ising", "svec_ising"};
}

GroupIrreps catalog_group(const std::string& name) {
  if (name == "repS3") return symmetric_group_s3();
  if (name == "repD4") return dihedral_group_d4();
  if (name == "repQ8") return quaternion_group_q8();
  if (name.rfind("repZ", 0) == 0 && name.size() > 4 &&
      std::all_of(name.begin() + 4, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const int n = std::stoi(name.substr(4));
    if (n >= 1 && n <= 12) return cyclic_group(n);
  }
  fail(ErrorKind::InvalidArgument, "unknown group catalog entry '" + name + "'");
}

Category catalog_get(const std::string& name) {
  auto cyclic = [](int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return FiniteAbelianGroup(t);
  };
  auto unit3 = [](int, int, int) { return Amplitude(ExactPhase(0, 1)); };
  if (name == "z4metric") {
    return build_pointed(name, {"0", "1", "2", "3"}, cyclic(4), unit3,
                         [](int a, int b) { return Amplitude(ExactPhase(a * b, 4)); });
  }
  if (name == "semion") {
    return build_pointed(
        name, {"1", "s"}, cyclic(2),
        [](int a, int b, int c) { return Amplitude(ExactPhase(a * b * c, 2)); },
        [](int a, int b) { return Amplitude(ExactPhase(a * b, 4)); });
  }
  if (name == "svec") {
    return build_pointed(name, {"1", "f"}, cyclic(2), unit3,
                         [](int a, int b) { return Amplitude(ExactPhase(a * b, 2)); });
  }
  if (name == "toric") {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    }
    return build_pointed(name, {"1", "e", "m", "f"}, FiniteAbelianGroup(t), unit3,
                         [](int a, int b) { return Amplitude(ExactPhase((a & 1) * ((b >> 1) & 1), 2)); });
  }
  if (name == "ising") return ising_category();
  if (name == "svec_ising") return deligne_product(catalog_get("svec"), ising_category(), name);
  return build_rep_category(catalog_group(name), name);
}

std::vector<int> irreps_trivial_on(const GroupIrreps& g, const std::vector<int>& n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < g.irreps.size(); ++i) {
    const MatrixIrrep& irr = g.irreps[i];
    if (irr.degree() != 1) continue;
    if (std::all_of(n.begin(), n.end(), [&](int x) { return std::abs(irr.images[x](0, 0) - 1.0) < 1e-9; })) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

std::vector<int> common_kernel(const GroupIrreps& g, const std::vector<int>& labels) {
  std::vector<int> out;
  for (int x = 0; x < g.group.order(); ++x) {
    if (std::all_of(labels.begin(), labels.end(), [&](int l) {
          const Matrix& m = g.irreps.at(static_cast<std::size_t>(l)).images[x];
          return max_abs(m - Matrix::Identity(m.rows(), m.rows())) < 1e-9;
        })) {
      out.push_back(x);
    }
  }
  return out;
}

RestrictionTable restriction_oracle(const GroupIrreps& g, const std::vector<int>& n_in) {
  const FiniteGroup& G = g.group;
  std::vector<int> n = n_in;
  std::sort(n.begin(), n.end());
  if (!G.is_normal(n)) fail(ErrorKind::InvalidArgument, "subgroup is not normal");

  std::vector<std::vector<Scalar>> chars;  // irreps of N, values aligned with n
  if (static_cast<int>(n.size()) == G.order()) {
    for (const MatrixIrrep& irr : g.irreps) {
      std::vector<Scalar> v;
      for (int x : n) v.push_back(irr.character(x));
      chars.push_back(std::move(v));
    }
  } else {
    for (int a : n) {
      for (int b : n) {
        if (G.mul(a, b) != G.mul(b, a)) fail(ErrorKind::OutOfScope, "restriction oracle needs N abelian or N = G");
      }
    }
    chars = abelian_subgroup_characters(G, n);
  }
  auto pos = [&](int x) { return static_cast<std::size_t>(std::find(n.begin(), n.end(), x) - n.begin()); };

  RestrictionTable t;
  const std::size_t gi = g.irreps.size(), ni = chars.size();
  t.branching.assign(gi, std::vector<int>(ni, 0));
  for (std::size_t p = 0; p < gi; ++p) {
    for (std::size_t q = 0; q < ni; ++q) {
      Scalar s = 0;
      for (std::size_t i = 0; i < n.size(); ++i) s += g.irreps[p].character(n[i]) * std::conj(chars[q][i]);
      t.branching[p][q] = static_cast<int>(std::lround(s.real() / static_cast<double>(n.size())));
    }
  }

  std::vector<std::size_t> parent(gi);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (std::size_t q = 0; q < ni; ++q) {
    std::optional<std::size_t> first;
    for (std::size_t p = 0; p < gi; ++p) {
      if (t.branching[p][q] == 0) continue;
      if (first) parent[root(p)] = root(*first);
      else first = p;
    }
  }
  std::map<std::size_t, std::size_t> orbit_of_root;
  for (std::size_t p = 0; p < gi; ++p) {
    auto [it, inserted] = orbit_of_root.emplace(root(p), t.orbits.size());
    if (inserted) t.orbits.emplace_back();
    t.orbits[it->second].push_back(static_cast<int>(p));
  }
  for (std::size_t q = 0; q < ni; ++q) {
    RestrictionSector s;
    s.dim = chars[q][0].real();
    for (std::size_t p = 0; p < gi; ++p) {
      if (t.branching[p][q] > 0) {
        s.orbit = orbit_of_root.at(root(p));
        s.multiplicity = t.branching[p][q];
        break;
      }
    }
    t.sectors.push_back(s);
  }

  std::vector<bool> covered(static_cast<std::size_t>(G.order()), false);
  for (int x = 0; x < G.order(); ++x) {
    if (covered[static_cast<std::size_t>(x)]) continue;
    for (int m : n) covered[static_cast<std::size_t>(G.mul(x, m))] = true;
    t.coset_representatives.push_back(x);
    std::vector<std::size_t> perm(ni);
    for (std::size_t q = 0; q < ni; ++q) {
      std::vector<Scalar> conj_char;
      for (int m : n) conj_char.push_back(chars[q][pos(G.mul(G.mul(G.inverse(x), m), x))]);
      for (std::size_t r = 0; r < ni; ++r) {
        bool same = true;
        for (std::size_t i = 0; i < n.size(); ++i) same = same && std::abs(conj_char[i] - chars[r][i]) < 1e-9;
        if (same) perm[q] = r;
      }
    }
    t.galois_action.push_back(std::move(perm));
  }
  return t;
}

}  // namespace tcat
