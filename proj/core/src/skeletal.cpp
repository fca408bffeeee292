#include "tcat/skeletal.hpp"

#include <cmath>
#include <sstream>

#include "tcat/error.hpp"

namespace tcat {

namespace {

std::string key_string(const FusionRing& ring, const FKey& k) {
  return "F[" + ring.name(k.a) + "," + ring.name(k.b) + "," + ring.name(k.c) + "|" + ring.name(k.d) + "|" +
         ring.name(k.e) + "," + ring.name(k.f) + "]";
}

void record(CoherenceReport& report, double defect, const std::function<std::string()>& where, Tolerance tol) {
  ++report.equations;
  if (defect > report.worst) {
    report.worst = defect;
    report.worst_at = where();
  }
  if (defect > tol.eps) report.ok = false;
}

}  // namespace

void for_each_admissible_f(const FusionRing& ring, const std::function<void(const FKey&)>& fn) {
  const int n = ring.rank();
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (Label c = 0; c < n; ++c) {
        for (const Channel& e : ring.channels(a, b)) {
          for (const Channel& d : ring.channels(e.label, c)) {
            for (const Channel& f : ring.channels(b, c)) {
              if (ring.N(a, f.label, d.label) > 0) fn(FKey{a, b, c, d.label, e.label, f.label});
            }
          }
        }
      }
    }
  }
}

SkeletalData::SkeletalData(FusionRing ring, std::map<FKey, Amplitude> f_symbols, std::map<RKey, Amplitude> r_symbols,
                           bool trivial_f_default)
    : ring_(std::move(ring)), f_(std::move(f_symbols)), r_(std::move(r_symbols)), trivial_f_default_(trivial_f_default) {
  if (!ring_.multiplicity_free()) {
    fail(ErrorKind::OutOfScope, "skeletal data requires a multiplicity-free fusion ring");
  }
  for (const auto& [key, value] : f_) {
    if (!admissible(key)) fail(ErrorKind::Inconsistent, "F-symbol " + key_string(ring_, key) + " is not admissible");
  }
  for (const auto& [key, value] : r_) {
    if (ring_.N(key.a, key.b, key.c) == 0) {
      fail(ErrorKind::Inconsistent, "R-symbol R[" + ring_.name(key.a) + "," + ring_.name(key.b) + "|" +
                                        ring_.name(key.c) + "] is not admissible");
    }
  }
  for (const FusionTriple& t : ring_.triples()) {
    if (!r_.contains(RKey{t.a, t.b, t.c})) {
      fail(ErrorKind::Inconsistent,
           "missing R-symbol R[" + ring_.name(t.a) + "," + ring_.name(t.b) + "|" + ring_.name(t.c) + "]");
    }
  }
  if (!trivial_f_default_) {
    for_each_admissible_f(ring_, [&](const FKey& k) {
      if (!f_.contains(k)) fail(ErrorKind::Inconsistent, "missing F-symbol " + key_string(ring_, k));
    });
  }
}

bool SkeletalData::admissible(const FKey& k) const {
  const int n = ring_.rank();
  for (Label x : {k.a, k.b, k.c, k.d, k.e, k.f}) {
    if (x < 0 || x >= n) return false;
  }
  return ring_.N(k.a, k.b, k.e) > 0 && ring_.N(k.e, k.c, k.d) > 0 && ring_.N(k.b, k.c, k.f) > 0 &&
         ring_.N(k.a, k.f, k.d) > 0;
}

Scalar SkeletalData::F(Label a, Label b, Label c, Label d, Label e, Label f) const {
  const FKey key{a, b, c, d, e, f};
  auto it = f_.find(key);
  if (it != f_.end()) return it->second.value;
  if (!admissible(key)) fail(ErrorKind::InvalidArgument, "F-symbol " + key_string(ring_, key) + " is not admissible");
  if (!trivial_f_default_) fail(ErrorKind::Inconsistent, "missing F-symbol " + key_string(ring_, key));
  return {1.0, 0.0};
}

Scalar SkeletalData::R(Label a, Label b, Label c) const {
  auto it = r_.find(RKey{a, b, c});
  if (it == r_.end()) {
    fail(ErrorKind::InvalidArgument,
         "R-symbol R[" + ring_.name(a) + "," + ring_.name(b) + "|" + ring_.name(c) + "] is not admissible");
  }
  return it->second.value;
}

CoherenceReport check_normalization(const SkeletalData& sk, Tolerance tol) {
  CoherenceReport report;
  const FusionRing& ring = sk.ring();
  for_each_admissible_f(ring, [&](const FKey& k) {
    if (k.a == 0 || k.b == 0 || k.c == 0) {
      record(report, std::abs(sk.F(k.a, k.b, k.c, k.d, k.e, k.f) - 1.0),
             [&] { return "unit normalisation of " + key_string(ring, k); }, tol);
    }
  });
  const int n = ring.rank();
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (Label c = 0; c < n; ++c) {
        for (Label d = 0; d < n; ++d) {
          std::vector<Label> es, fs;
          for (const Channel& e : ring.channels(a, b)) {
            if (ring.N(e.label, c, d) > 0) es.push_back(e.label);
          }
          for (const Channel& f : ring.channels(b, c)) {
            if (ring.N(a, f.label, d) > 0) fs.push_back(f.label);
          }
          if (es.empty() && fs.empty()) continue;
          if (es.size() != fs.size()) {
            record(report, 1.0, [&] { return "F-matrix for (" + ring.name(a) + "," + ring.name(b) + "," +
                                              ring.name(c) + ";" + ring.name(d) + ") is not square"; }, tol);
            continue;
          }
          const auto m = static_cast<Eigen::Index>(es.size());
          Matrix fm(m, m);
          for (Eigen::Index i = 0; i < m; ++i) {
            for (Eigen::Index j = 0; j < m; ++j) fm(i, j) = sk.F(a, b, c, d, es[i], fs[j]);
          }
          record(report, max_abs(fm * fm.adjoint() - Matrix::Identity(m, m)),
                 [&] { return "unitarity of F^{" + ring.name(a) + "," + ring.name(b) + "," + ring.name(c) + "}_" +
                              ring.name(d); }, tol);
        }
      }
    }
  }
  for (const auto& [key, value] : sk.r_symbols()) {
    record(report, std::abs(std::abs(value.value) - 1.0),
           [&] { return "|R[" + ring.name(key.a) + "," + ring.name(key.b) + "|" + ring.name(key.c) + "]| != 1"; }, tol);
  }
  return report;
}

CoherenceReport check_pentagon(const SkeletalData& sk, Tolerance tol) {
  // F^{fcd}_e[g,l] F^{abl}_e[f,k] = sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l]
  CoherenceReport report;
  const FusionRing& ring = sk.ring();
  const int n = ring.rank();
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (Label c = 0; c < n; ++c) {
        for (Label d = 0; d < n; ++d) {
          for (const Channel& f : ring.channels(a, b)) {
            for (const Channel& g : ring.channels(f.label, c)) {
              for (const Channel& e : ring.channels(g.label, d)) {
                for (const Channel& l : ring.channels(c, d)) {
                  if (ring.N(f.label, l.label, e.label) == 0) continue;
                  for (const Channel& k : ring.channels(b, l.label)) {
                    if (ring.N(a, k.label, e.label) == 0) continue;
                    const Scalar lhs = sk.F(f.label, c, d, e.label, g.label, l.label) *
                                       sk.F(a, b, l.label, e.label, f.label, k.label);
                    Scalar rhs = 0.0;
                    for (const Channel& h : ring.channels(b, c)) {
                      if (ring.N(a, h.label, g.label) == 0 || ring.N(h.label, d, k.label) == 0) continue;
                      rhs += sk.F(a, b, c, g.label, f.label, h.label) * sk.F(a, h.label, d, e.label, g.label, k.label) *
                             sk.F(b, c, d, k.label, h.label, l.label);
                    }
                    record(report, std::abs(lhs - rhs), [&] {
                      return "pentagon (" + ring.name(a) + "," + ring.name(b) + "," + ring.name(c) + "," +
                             ring.name(d) + ";" + ring.name(e.label) + ") f=" + ring.name(f.label) +
                             " g=" + ring.name(g.label) + " k=" + ring.name(k.label) + " l=" + ring.name(l.label);
                    }, tol);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

CoherenceReport check_hexagon(const SkeletalData& sk, Tolerance tol) {
  // R^{ca}_e F^{acb}_d[e,g] R^{cb}_g = sum_f F^{cab}_d[e,f] R^{cf}_d F^{abc}_d[f,g]
  // and the same with every R replaced by the inverse of its transpose.
  CoherenceReport report;
  const FusionRing& ring = sk.ring();
  const int n = ring.rank();
  auto rinv = [&](Label x, Label y, Label z) { return 1.0 / sk.R(y, x, z); };
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (Label c = 0; c < n; ++c) {
        for (Label d = 0; d < n; ++d) {
          for (const Channel& e : ring.channels(c, a)) {
            if (ring.N(e.label, b, d) == 0) continue;
            for (const Channel& g : ring.channels(c, b)) {
              if (ring.N(a, g.label, d) == 0) continue;
              const Scalar f1 = sk.F(a, c, b, d, e.label, g.label);
              const Scalar lhs1 = sk.R(c, a, e.label) * f1 * sk.R(c, b, g.label);
              const Scalar lhs2 = rinv(c, a, e.label) * f1 * rinv(c, b, g.label);
              Scalar rhs1 = 0.0, rhs2 = 0.0;
              for (const Channel& f : ring.channels(a, b)) {
                if (ring.N(c, f.label, d) == 0) continue;
                const Scalar outer = sk.F(c, a, b, d, e.label, f.label) * sk.F(a, b, c, d, f.label, g.label);
                rhs1 += outer * sk.R(c, f.label, d);
                rhs2 += outer * rinv(c, f.label, d);
              }
              auto where = [&](int which) {
                return std::function<std::string()>([&, which] {
                  return "hexagon " + std::to_string(which) + " (" + ring.name(a) + "," + ring.name(b) + "," +
                         ring.name(c) + ";" + ring.name(d) + ") e=" + ring.name(e.label) + " g=" + ring.name(g.label);
                });
              };
              record(report, std::abs(lhs1 - rhs1), where(1), tol);
              record(report, std::abs(lhs2 - rhs2), where(2), tol);
            }
          }
        }
      }
    }
  }
  return report;
}

std::vector<Scalar> twist_from_R(const SkeletalData& sk, std::span<const double> dims) {
  const FusionRing& ring = sk.ring();
  std::vector<Scalar> out;
  for (Label a = 0; a < ring.rank(); ++a) {
    Scalar sum = 0.0;
    for (const Channel& c : ring.channels(a, a)) sum += dims[c.label] / dims[a] * sk.R(a, a, c.label);
    out.push_back(sum);
  }
  return out;
}

Matrix ymatrix_from_R(const SkeletalData& sk, std::span<const double> dims) {
  const FusionRing& ring = sk.ring();
  const int n = ring.rank();
  Matrix y = Matrix::Zero(n, n);
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (const Channel& c : ring.channels(a, b)) y(a, b) += dims[c.label] * sk.R(b, a, c.label) * sk.R(a, b, c.label);
    }
  }
  return y;
}

bool monodromy_trivial(const SkeletalData& sk, Label a, Label b, Tolerance tol) {
  for (const Channel& c : sk.ring().channels(a, b)) {
    if (!near(sk.R(b, a, c.label) * sk.R(a, b, c.label), Scalar(1.0), tol)) return false;
  }
  return true;
}

SkeletalData gauge_transform(const SkeletalData& sk, const VertexGauge& u) {
  std::map<FKey, Amplitude> f;
  for_each_admissible_f(sk.ring(), [&](const FKey& k) {
    const Scalar factor = u(k.a, k.b, k.e) * u(k.e, k.c, k.d) / (u(k.b, k.c, k.f) * u(k.a, k.f, k.d));
    f.emplace(k, Amplitude(sk.F(k.a, k.b, k.c, k.d, k.e, k.f) * factor));
  });
  std::map<RKey, Amplitude> r;
  for (const auto& [key, value] : sk.r_symbols()) {
    r.emplace(key, Amplitude(value.value * u(key.a, key.b, key.c) / u(key.b, key.a, key.c)));
  }
  return SkeletalData(sk.ring(), std::move(f), std::move(r), false);
}

}  // namespace tcat
