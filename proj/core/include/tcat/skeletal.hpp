#pragma once

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tcat/fusion_ring.hpp"
#include "tcat/numerics.hpp"

namespace tcat {

/// F^{abc}_d[e,f]: e is the a(x)b channel of the left tree, f the b(x)c channel of the right tree.
struct FKey {
  Label a, b, c, d, e, f;
  friend auto operator<=>(const FKey&, const FKey&) = default;
};

/// R^{ab}_c: braiding eigenvalue of a past b in fusion channel c.
struct RKey {
  Label a, b, c;
  friend auto operator<=>(const RKey&, const RKey&) = default;
};

/// Multiplicity-free skeletal F- and R-symbols over a fusion ring.
///
/// Trees follow the splitting convention: the left tree ((ab)_e c)_d expands as
/// sum_f F^{abc}_d[e,f] times the right tree (a(bc)_f)_d, and the braiding applied
/// to the splitting vertex c -> (b, a) gives R^{ab}_c times the vertex c -> (a, b).
class SkeletalData {
 public:
  SkeletalData() = default;
  SkeletalData(FusionRing ring, std::map<FKey, Amplitude> f_symbols, std::map<RKey, Amplitude> r_symbols,
               bool trivial_f_default);

  const FusionRing& ring() const { return ring_; }
  bool trivial_f_default() const { return trivial_f_default_; }
  const std::map<FKey, Amplitude>& f_symbols() const { return f_; }
  const std::map<RKey, Amplitude>& r_symbols() const { return r_; }

  bool admissible(const FKey& k) const;
  Scalar F(Label a, Label b, Label c, Label d, Label e, Label f) const;
  Scalar R(Label a, Label b, Label c) const;

 private:
  FusionRing ring_;
  std::map<FKey, Amplitude> f_;
  std::map<RKey, Amplitude> r_;
  bool trivial_f_default_ = true;
};

/// Calls fn for every admissible sextuple of a multiplicity-free ring.
void for_each_admissible_f(const FusionRing& ring, const std::function<void(const FKey&)>& fn);

struct CoherenceReport {
  bool ok = true;
  double worst = 0.0;
  std::string worst_at;
  std::size_t equations = 0;
};

/// Unit normalisation of F, unitarity of every F-matrix, and |R| = 1.
CoherenceReport check_normalization(const SkeletalData& sk, Tolerance tol = {});
CoherenceReport check_pentagon(const SkeletalData& sk, Tolerance tol = {});
CoherenceReport check_hexagon(const SkeletalData& sk, Tolerance tol = {});

/// theta_a = sum_c (d_c / d_a) R^{aa}_c.
std::vector<Scalar> twist_from_R(const SkeletalData& sk, std::span<const double> dims);

/// Y_ab = sum_c N_ab^c d_c R^{ba}_c R^{ab}_c.
Matrix ymatrix_from_R(const SkeletalData& sk, std::span<const double> dims);

/// True iff R^{ba}_c R^{ab}_c = 1 in every channel c of a (x) b.
bool monodromy_trivial(const SkeletalData& sk, Label a, Label b, Tolerance tol = {});

/// Vertex gauge u(a, b; c) applied to every splitting vertex a (x) b -> c:
/// F^{abc}_d[e,f] picks up u(a,b;e) u(e,c;d) / (u(b,c;f) u(a,f;d)) and R^{ab}_c picks up u(a,b;c) / u(b,a;c).
using VertexGauge = std::function<Scalar(Label, Label, Label)>;
SkeletalData gauge_transform(const SkeletalData& sk, const VertexGauge& u);

}  // namespace tcat
