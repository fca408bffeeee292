#include "tcat/closure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tcat/error.hpp"

namespace tcat {

namespace {

std::string exponent_suffix(const std::vector<int>& exps) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) s += (i ? "," : "") + std::to_string(exps[i]);
  return s;
}

double sum_sq(const std::vector<double>& dims) {
  double s = 0;
  for (double d : dims) s += d * d;
  return s;
}

BetaTable recognize_supplied(const FusionRing& ring, const SuppliedBeta& sb, const std::vector<Label>& stabilizer,
                             Tolerance tol) {
  std::vector<Label> elems = sb.elements;
  std::sort(elems.begin(), elems.end());
  std::vector<Label> stab = stabilizer;
  std::sort(stab.begin(), stab.end());
  if (elems != stab) {
    fail(ErrorKind::Inconsistent, "supplied beta is not indexed by the stabilizer " + ring.describe(stabilizer));
  }
  BetaTable beta;
  for (std::size_t i = 0; i < sb.elements.size(); ++i) {
    for (std::size_t j = 0; j < sb.elements.size(); ++j) {
      const Amplitude& a = sb.values.at(i).at(j);
      auto p = a.exact ? a.exact : ExactPhase::recognize(a.value, static_cast<long>(stab.size()), tol);
      if (!p) fail(ErrorKind::Inconsistent, "supplied beta entry is not a root of unity");
      beta[{sb.elements[i], sb.elements[j]}] = *p;
    }
  }
  return beta;
}

}  // namespace

std::vector<OrbitRecord> orbits(const FusionRing& ring, const GroupTable& K) {
  auto act = [&](Label k, Label rho) {
    auto p = ring.simple_product(k, rho);
    if (!p) fail(ErrorKind::InvalidArgument, "label " + ring.name(k) + " does not act invertibly");
    return *p;
  };
  auto stabilizer = [&](Label rho) {
    std::vector<Label> s;
    for (Label k : K.labels()) {
      if (act(k, rho) == rho) s.push_back(k);
    }
    return s;
  };
  std::vector<OrbitRecord> out;
  std::vector<bool> seen(static_cast<std::size_t>(ring.rank()), false);
  for (Label rho = 0; rho < ring.rank(); ++rho) {
    if (seen[static_cast<std::size_t>(rho)]) continue;
    OrbitRecord rec;
    rec.representative = rho;
    for (Label k : K.labels()) rec.members.push_back(act(k, rho));
    std::sort(rec.members.begin(), rec.members.end());
    rec.members.erase(std::unique(rec.members.begin(), rec.members.end()), rec.members.end());
    rec.stabilizer = stabilizer(rho);
    for (Label m : rec.members) {
      seen[static_cast<std::size_t>(m)] = true;
      if (stabilizer(m) != rec.stabilizer) {
        fail(ErrorKind::Inconsistent, "stabilizer is not constant along the orbit of " + ring.name(rho));
      }
    }
    if (rec.members.size() * rec.stabilizer.size() != static_cast<std::size_t>(K.order())) {
      fail(ErrorKind::Inconsistent, "orbit-stabilizer count fails for " + ring.name(rho));
    }
    rec.radical = rec.stabilizer;
    out.push_back(std::move(rec));
  }
  return out;
}

OrbitRecord decompose_orbit(OrbitRecord rec, BetaTable beta, std::string source) {
  const auto& stab = rec.stabilizer;
  for (Label k : stab) {
    if (!beta.at({k, k}).is_one()) fail(ErrorKind::Inconsistent, "beta is not alternating");
    for (Label l : stab) {
      if (!(beta.at({k, l}) * beta.at({l, k})).is_one()) fail(ErrorKind::Inconsistent, "beta is not antisymmetric");
    }
  }
  rec.radical.clear();
  for (Label k : stab) {
    bool central = true;
    for (Label l : stab) central = central && beta.at({k, l}).is_one();
    if (central) rec.radical.push_back(k);
  }
  const std::size_t quotient = stab.size() / rec.radical.size();
  const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(quotient))));
  if (static_cast<std::size_t>(n * n) != quotient || quotient * rec.radical.size() != stab.size()) {
    fail(ErrorKind::Inconsistent, "|K_rho|/|L_rho| is not a perfect square");
  }
  rec.multiplicity = n;
  rec.beta = std::move(beta);
  rec.beta_source = std::move(source);
  return rec;
}

ClosureReport close(const Category& cat, std::span<const Label> S, Tolerance tol) {
  const PremodularData& data = cat.data;
  const FusionRing& ring = data.ring;
  const TransparentInput input = make_transparent_input(data, S, tol);

  std::optional<CrossedCalculus> calc;
  if (cat.skeletal) {
    try {
      calc.emplace(*cat.skeletal, input, tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutOfScope) throw;
    }
  }

  ClosureReport report;
  report.parent = cat.name;
  report.labels = ring.names();
  report.transparent = input.K.labels();
  report.K = input.K;
  report.global_dim_parent = sum_sq(data.dims);

  const std::vector<Label> center = transparent_simples(data, tol);
  auto degenerate = [&](Label a) { return std::binary_search(center.begin(), center.end(), a); };

  for (OrbitRecord rec : orbits(ring, input.K)) {
    const Label rho = rec.representative;
    auto supplied = cat.supplied_beta.find(rho);
    std::optional<BetaTable> from_supplied;
    if (supplied != cat.supplied_beta.end()) from_supplied = recognize_supplied(ring, supplied->second, rec.stabilizer, tol);

    if (calc) {
      const EndAlgebra alg = calc->end_algebra(rho);
      if (from_supplied && *from_supplied != alg.beta) {
        fail(ErrorKind::Inconsistent, "supplied beta for " + ring.name(rho) + " disagrees with the F/R-derived beta");
      }
      rec = decompose_orbit(std::move(rec), alg.beta, "skeletal");
    } else if (from_supplied) {
      rec = decompose_orbit(std::move(rec), *from_supplied, "supplied");
    } else if (group_structure(ring, rec.stabilizer).group().is_cyclic()) {
      BetaTable trivial;
      for (Label k : rec.stabilizer) {
        for (Label l : rec.stabilizer) trivial[{k, l}] = ExactPhase(0, 1);
      }
      rec = decompose_orbit(std::move(rec), trivial, "trivial (cyclic K_rho)");
    } else {
      fail(ErrorKind::OutOfScope, "orbit of " + ring.name(rho) + " has non-cyclic stabilizer " +
                                      ring.describe(rec.stabilizer) + "; needs skeletal data or supplied beta");
    }

    const GroupTable L = group_structure(ring, rec.radical);
    const double dim = data.dim(rho) / (rec.multiplicity * static_cast<double>(L.order()));
    for (const Character& chi : L.group().characters()) {
      Sector s;
      s.orbit = report.orbits.size();
      s.character = chi.exponents;
      for (Label l : rec.radical) s.character_values.push_back(chi(*L.element(l)));
      s.name = L.order() == 1 ? ring.name(rho) : ring.name(rho) + "^" + exponent_suffix(chi.exponents);
      s.dim = dim;
      s.twist = data.twists.at(static_cast<std::size_t>(rho));
      s.degenerate = degenerate(rho);
      s.multiplicity = rec.multiplicity;
      report.sectors.push_back(std::move(s));
    }
    report.orbits.push_back(std::move(rec));
  }

  for (const Sector& s : report.sectors) report.global_dim_closure += s.dim * s.dim;
  const double expected = report.global_dim_parent / input.K.order();
  if (std::abs(report.global_dim_closure - expected) > tol.eps * std::max(1.0, expected)) {
    fail(ErrorKind::Numerical, "global dimension of the closure differs from the parent's divided by |K|");
  }

  for (const Character& g : input.characters) {
    report.galois_characters.push_back(g.exponents);
    report.galois_action.push_back(gaction_on_sectors(report, g));
  }
  report.modular = std::count_if(report.sectors.begin(), report.sectors.end(),
                                 [](const Sector& s) { return s.degenerate; }) == 1;

  std::vector<Label> k_sorted = report.transparent;
  std::sort(k_sorted.begin(), k_sorted.end());
  if (k_sorted == center && !report.modular) {
    fail(ErrorKind::Numerical, "closure by the full center has a degenerate sector other than the unit");
  }
  return report;
}

ClosureReport close_auto(const Category& cat, Tolerance tol) {
  const PremodularData& data = cat.data;
  const FusionRing& ring = data.ring;
  const CenterSplit split = split_center(data, tol);
  const bool pointed = std::all_of(split.bosons.begin(), split.bosons.end(), [&](Label a) {
    return ring.simple_product(a, ring.dual(a)) == std::optional<Label>(0);
  });
  if (pointed) return close(cat, split.bosons, tol);

  if (split.fermions.empty() && static_cast<int>(split.bosons.size()) == ring.rank()) {
    ClosureReport report;
    report.parent = cat.name;
    report.labels = ring.names();
    for (Label a = 0; a < ring.rank(); ++a) report.transparent.push_back(a);
    OrbitRecord rec;
    rec.members = report.transparent;
    rec.beta_source = "symmetric parent: trivial closure";
    report.orbits.push_back(rec);
    Sector unit;
    unit.name = ring.name(0);
    unit.twist = Amplitude(ExactPhase(0, 1));
    unit.degenerate = true;
    report.sectors.push_back(unit);
    report.global_dim_parent = sum_sq(data.dims);
    report.global_dim_closure = 1.0;
    report.modular = true;
    report.trivial = true;
    return report;
  }
  fail(ErrorKind::OutOfScope, "bosonic center " + ring.describe(split.bosons) +
                                  " is not pointed; the closure needs a nonabelian Galois group");
}

std::vector<std::size_t> gaction_on_sectors(const ClosureReport& report, const Character& g) {
  std::vector<std::size_t> perm(report.sectors.size());
  for (std::size_t i = 0; i < report.sectors.size(); ++i) {
    const Sector& s = report.sectors[i];
    const OrbitRecord& rec = report.orbits[s.orbit];
    std::vector<ExactPhase> moved;
    for (std::size_t j = 0; j < rec.radical.size(); ++j) {
      moved.push_back(g(*report.K.element(rec.radical[j])) * s.character_values[j]);
    }
    auto it = std::find_if(report.sectors.begin(), report.sectors.end(), [&](const Sector& t) {
      return t.orbit == s.orbit && t.character_values == moved;
    });
    if (it == report.sectors.end()) fail(ErrorKind::Inconsistent, "Galois action leaves the sector set");
    perm[i] = static_cast<std::size_t>(it - report.sectors.begin());
  }
  return perm;
}

bool refines(const ClosureReport& fine, const ClosureReport& coarse, Tolerance tol) {
  for (Label k : coarse.transparent) {
    if (std::find(fine.transparent.begin(), fine.transparent.end(), k) == fine.transparent.end()) return false;
  }
  for (const Sector& cs : coarse.sectors) {
    const Label rho = coarse.orbits[cs.orbit].representative;
    bool found = false;
    for (const Sector& fs : fine.sectors) {
      const auto& members = fine.orbits[fs.orbit].members;
      if (std::find(members.begin(), members.end(), rho) == members.end()) continue;
      found = true;
      const double ratio = cs.dim / fs.dim;
      if (ratio < 1.0 - tol.eps || std::abs(ratio - std::round(ratio)) > tol.eps) return false;
      if (!near(cs.twist.value, fs.twist.value, tol)) return false;
      if (cs.degenerate != fs.degenerate) return false;
    }
    if (!found) return false;
  }
  const double ratio = coarse.global_dim_closure / fine.global_dim_closure;
  const double expected = static_cast<double>(fine.transparent.size()) / static_cast<double>(coarse.transparent.size());
  return std::abs(ratio - expected) <= tol.eps * std::max(1.0, expected);
}

std::vector<GaloisEntry> galois_lattice(const Category& cat, std::span<const Label> S, Tolerance tol) {
  const TransparentInput input = make_transparent_input(cat.data, S, tol);
  const auto& chars = input.characters;
  const std::vector<int>& orders = input.K.group().basis_orders();

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < chars.size(); ++i) index[chars[i].exponents] = static_cast<int>(i);
  std::vector<std::vector<int>> table(chars.size(), std::vector<int>(chars.size()));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j < chars.size(); ++j) {
      std::vector<int> e(orders.size());
      for (std::size_t t = 0; t < orders.size(); ++t) e[t] = (chars[i].exponents[t] + chars[j].exponents[t]) % orders[t];
      table[i][j] = index.at(e);
    }
  }
  const FiniteAbelianGroup G(table);

  std::vector<GaloisEntry> entries;
  std::vector<std::vector<int>> members;
  for (const std::vector<int>& H : G.subgroups()) {
    GaloisEntry entry;
    for (int h : H) entry.subgroup.push_back(chars[static_cast<std::size_t>(h)].exponents);
    for (int e = 0; e < input.K.order(); ++e) {
      bool fixed = true;
      for (int h : H) fixed = fixed && chars[static_cast<std::size_t>(h)](e).is_one();
      if (fixed) entry.annihilator.push_back(input.K.label(e));
    }
    std::sort(entry.annihilator.begin(), entry.annihilator.end());
    entry.table = close(cat, entry.annihilator, tol);
    entries.push_back(std::move(entry));
    members.push_back(H);
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (i == j || !std::includes(members[j].begin(), members[j].end(), members[i].begin(), members[i].end())) continue;
      if (!refines(entries[i].table, entries[j].table, tol)) {
        fail(ErrorKind::Inconsistent, "Galois lattice is not anti-monotone");
      }
    }
  }
  return entries;
}

}  // namespace tcat
