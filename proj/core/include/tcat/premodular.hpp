#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcat/fusion_ring.hpp"
#include "tcat/numerics.hpp"

namespace tcat {

/// Ring plus dimensions, twists and an optional declared Y-matrix.
struct PremodularData {
  FusionRing ring;
  std::vector<double> dims;
  std::vector<Amplitude> twists;
  std::optional<Matrix> ymatrix;

  Scalar twist(Label a) const { return twists.at(static_cast<std::size_t>(a)).value; }
  double dim(Label a) const { return dims.at(static_cast<std::size_t>(a)); }
  int rank() const { return ring.rank(); }
};

/// Assembles premodular data; dimensions default to the Frobenius-Perron
/// values and supplied dimensions must agree with them within tol.
PremodularData make_premodular(FusionRing ring, std::vector<Amplitude> twists,
                               std::optional<std::vector<double>> dims = std::nullopt,
                               std::optional<Matrix> ymatrix = std::nullopt, Tolerance tol = {});

struct PremodularIssue {
  std::string check;
  std::string detail;
};

/// Twist invariants (unit modulus, theta_1 = 1, theta_a = theta_dual(a)) and
/// Y-matrix invariants, including consistency of a declared Y with the twists.
std::vector<PremodularIssue> validate_premodular(const PremodularData& data, Tolerance tol = {});

/// Y_ab = sum_c N_ab^c theta_c / (theta_a theta_b) d_c. Throws if a declared
/// Y deviates from it by more than tol.
Matrix ymatrix_from_twists(const PremodularData& data, Tolerance tol = {});

/// The declared Y if present, otherwise the twist-derived one.
Matrix effective_ymatrix(const PremodularData& data, Tolerance tol = {});

/// {a : Y_ab = d_a d_b for all b}.
std::vector<Label> transparent_simples(const PremodularData& data, Tolerance tol = {});

/// Throws ErrorKind::Inconsistent unless `transparent` is closed under duals and fusion.
void center_closure_check(const PremodularData& data, std::span<const Label> transparent);

struct ModularityCertificate {
  bool modular = false;
  int y_rank = 0;
  std::vector<Label> center;
};

/// Rank criterion and trivial-center criterion; throws ErrorKind::Numerical if they disagree.
ModularityCertificate is_modular(const PremodularData& data, Tolerance tol = {});

struct ModularRepresentation {
  Matrix S;
  Matrix T;
  Scalar gauss_sum;      // sum_a d_a^2 theta_a
  Scalar central_phase;  // the unimodular factor applied to diag(theta)
  double unitarity_defect = 0;
  double charge_conjugation_defect = 0;
  double s4_defect = 0;
  double st3_defect = 0;

  bool ok(Tolerance tol) const {
    return unitarity_defect <= tol.eps && charge_conjugation_defect <= tol.eps && s4_defect <= tol.eps &&
           st3_defect <= tol.eps;
  }
};

/// Normalised S and T with all SL(2,Z) relation defects measured.
ModularRepresentation st_and_sl2z(const PremodularData& data, Tolerance tol = {});

/// theta_{g rho} / (theta_g theta_rho) for invertible g.
Scalar monodromy_with_invertible(const PremodularData& data, Label g, Label rho);

/// Labels with trivial monodromy against every member of the symmetric pointed subset S.
std::vector<Label> mutually_transparent(const PremodularData& data, std::span<const Label> subset,
                                        Tolerance tol = {});

struct CenterSplit {
  std::vector<Label> bosons;
  std::vector<Label> fermions;
};

CenterSplit split_center(const PremodularData& data, Tolerance tol = {});

struct FixpointReport {
  std::vector<Label> fermions_checked;  // invertible transparent fermions
  bool vacuous = true;
};

/// Every invertible transparent fermion must act without fixpoints; a
/// violation throws ErrorKind::Inconsistent.
FixpointReport fermion_fixpoint_diagnostic(const PremodularData& data, Tolerance tol = {});

}  // namespace tcat
