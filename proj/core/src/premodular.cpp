#include "tcat/premodular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tcat/error.hpp"

namespace tcat {

namespace {

std::string fmt(Scalar z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

void require_label(const PremodularData& data, Label a) {
  if (a < 0 || a >= data.rank()) fail(ErrorKind::InvalidArgument, "label index out of range");
}

void check_closed(const PremodularData& data, std::span<const Label> set, const std::string& what) {
  const FusionRing& ring = data.ring;
  auto contains = [&](Label x) { return std::find(set.begin(), set.end(), x) != set.end(); };
  for (Label a : set) {
    if (!contains(ring.dual(a))) {
      fail(ErrorKind::Inconsistent, what + " not closed under duals: " + ring.name(a) + " present, " +
                                        ring.name(ring.dual(a)) + " missing");
    }
    for (Label b : set) {
      for (const Channel& ch : ring.channels(a, b)) {
        if (!contains(ch.label)) {
          fail(ErrorKind::Inconsistent, what + " not closed under fusion: " + ring.name(a) + " (x) " + ring.name(b) +
                                            " contains " + ring.name(ch.label));
        }
      }
    }
  }
}

}  // namespace

PremodularData make_premodular(FusionRing ring, std::vector<Amplitude> twists, std::optional<std::vector<double>> dims,
                               std::optional<Matrix> ymatrix, Tolerance tol) {
  const int n = ring.rank();
  if (static_cast<int>(twists.size()) != n) fail(ErrorKind::InvalidArgument, "twist list has wrong length");
  std::vector<double> fp = fp_dims(ring, tol);
  if (dims) {
    if (static_cast<int>(dims->size()) != n) fail(ErrorKind::InvalidArgument, "dimension list has wrong length");
    double worst = 0.0;
    Label at = 0;
    for (Label a = 0; a < n; ++a) {
      const double dev = std::abs((*dims)[a] - fp[a]);
      if (dev > worst) {
        worst = dev;
        at = a;
      }
    }
    if (worst > tol.eps) {
      std::ostringstream os;
      os.precision(17);
      os << "declared dimension of " << ring.name(at) << " is " << (*dims)[at] << " but the Frobenius-Perron value is "
         << fp[at];
      fail(ErrorKind::Inconsistent, os.str());
    }
  }
  if (ymatrix && (ymatrix->rows() != n || ymatrix->cols() != n)) {
    fail(ErrorKind::InvalidArgument, "Y-matrix has wrong shape");
  }
  PremodularData out{std::move(ring), dims ? std::move(*dims) : std::move(fp), std::move(twists), std::move(ymatrix)};
  return out;
}

std::vector<PremodularIssue> validate_premodular(const PremodularData& data, Tolerance tol) {
  std::vector<PremodularIssue> issues;
  const FusionRing& ring = data.ring;
  if (!near(data.twist(0), Scalar(1.0), tol)) issues.push_back({"twist-unit", "theta_1 = " + fmt(data.twist(0))});
  for (Label a = 0; a < data.rank(); ++a) {
    if (std::abs(std::abs(data.twist(a)) - 1.0) > tol.eps) {
      issues.push_back({"twist-modulus", "|theta_" + ring.name(a) + "| != 1"});
    }
    if (!near(data.twist(a), data.twist(ring.dual(a)), tol)) {
      issues.push_back({"twist-dual", "theta_" + ring.name(a) + " != theta_" + ring.name(ring.dual(a))});
    }
  }
  Matrix y;
  try {
    y = effective_ymatrix(data, tol);
    if (data.ymatrix) (void)ymatrix_from_twists(data, tol);
  } catch (const Error& e) {
    issues.push_back({"ymatrix", e.what()});
    return issues;
  }
  for (Label a = 0; a < data.rank(); ++a) {
    if (!near(y(0, a), Scalar(data.dim(a)), tol)) issues.push_back({"ymatrix-unit-row", "Y_1," + ring.name(a) + " != d"});
    for (Label b = 0; b < data.rank(); ++b) {
      if (!near(y(a, b), y(b, a), tol)) {
        issues.push_back({"ymatrix-symmetric", "Y not symmetric at (" + ring.name(a) + "," + ring.name(b) + ")"});
      }
      if (!near(y(ring.dual(a), b), std::conj(y(a, b)), tol)) {
        issues.push_back({"ymatrix-conjugate", "Y_dual(a),b != conj(Y_a,b) at (" + ring.name(a) + "," + ring.name(b) + ")"});
      }
    }
  }
  return issues;
}

Matrix ymatrix_from_twists(const PremodularData& data, Tolerance tol) {
  const int n = data.rank();
  Matrix y = Matrix::Zero(n, n);
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      Scalar sum = 0.0;
      for (const Channel& ch : data.ring.channels(a, b)) {
        sum += static_cast<double>(ch.multiplicity) * data.twist(ch.label) / (data.twist(a) * data.twist(b)) *
               data.dim(ch.label);
      }
      y(a, b) = sum;
    }
  }
  if (data.ymatrix) {
    double worst = 0.0;
    Label wa = 0, wb = 0;
    for (Label a = 0; a < n; ++a) {
      for (Label b = 0; b < n; ++b) {
        const double dev = std::abs((*data.ymatrix)(a, b) - y(a, b));
        if (dev > worst) {
          worst = dev;
          wa = a;
          wb = b;
        }
      }
    }
    if (worst > tol.eps) {
      fail(ErrorKind::Inconsistent, "declared Y-matrix disagrees with twists; worst entry (" + data.ring.name(wa) + "," +
                                        data.ring.name(wb) + "): declared " + fmt((*data.ymatrix)(wa, wb)) +
                                        ", computed " + fmt(y(wa, wb)));
    }
  }
  return y;
}

Matrix effective_ymatrix(const PremodularData& data, Tolerance tol) {
  if (data.ymatrix) return *data.ymatrix;
  return ymatrix_from_twists(data, tol);
}

std::vector<Label> transparent_simples(const PremodularData& data, Tolerance tol) {
  const Matrix y = effective_ymatrix(data, tol);
  std::vector<Label> out;
  for (Label a = 0; a < data.rank(); ++a) {
    bool transparent = true;
    for (Label b = 0; b < data.rank() && transparent; ++b) {
      transparent = near(y(a, b), Scalar(data.dim(a) * data.dim(b)), tol);
    }
    if (transparent) out.push_back(a);
  }
  return out;
}

void center_closure_check(const PremodularData& data, std::span<const Label> transparent) {
  for (Label a : transparent) require_label(data, a);
  check_closed(data, transparent, "transparent set");
}

ModularityCertificate is_modular(const PremodularData& data, Tolerance tol) {
  ModularityCertificate cert;
  const Matrix y = effective_ymatrix(data, tol);
  cert.y_rank = rank(y, tol);
  cert.center = transparent_simples(data, tol);
  const bool by_rank = cert.y_rank == data.rank();
  const bool by_center = cert.center.size() == 1;
  if (by_rank != by_center) {
    fail(ErrorKind::Numerical, "modularity criteria disagree: rank(Y) = " + std::to_string(cert.y_rank) + " of " +
                                   std::to_string(data.rank()) + " but center has " +
                                   std::to_string(cert.center.size()) + " labels");
  }
  cert.modular = by_rank;
  return cert;
}

ModularRepresentation st_and_sl2z(const PremodularData& data, Tolerance tol) {
  if (!is_modular(data, tol).modular) fail(ErrorKind::InvalidArgument, "S and T require modular data");
  const int n = data.rank();
  const Matrix y = effective_ymatrix(data, tol);
  double global = 0.0;
  Scalar gauss = 0.0;
  for (Label a = 0; a < n; ++a) {
    global += data.dim(a) * data.dim(a);
    gauss += data.dim(a) * data.dim(a) * data.twist(a);
  }
  if (std::abs(gauss) <= tol.eps) fail(ErrorKind::Numerical, "degenerate Gauss sum");

  ModularRepresentation rep;
  rep.gauss_sum = gauss;
  const double d = std::sqrt(global);
  rep.S = Matrix::Zero(n, n);
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) rep.S(a, b) = y(data.ring.dual(a), b) / d;
  }
  Matrix charge = Matrix::Zero(n, n);
  for (Label a = 0; a < n; ++a) charge(a, data.ring.dual(a)) = 1.0;
  const Matrix id = Matrix::Identity(n, n);
  const Matrix s2 = rep.S * rep.S;

  // The three cube roots of conj(gauss/|gauss|); keep the best, ties toward the smallest argument.
  const double base = -std::arg(gauss) / 3.0;
  const double third = 2.0 * std::numbers::pi / 3.0;
  double best_defect = 0.0;
  double best_angle = 0.0;
  bool have = false;
  std::vector<double> angles;
  for (int j = 0; j < 3; ++j) {
    double angle = std::fmod(base + third * j, 2.0 * std::numbers::pi);
    if (angle < 0) angle += 2.0 * std::numbers::pi;
    angles.push_back(angle);
  }
  std::sort(angles.begin(), angles.end());
  for (double angle : angles) {
    const Scalar phi = std::polar(1.0, angle);
    Matrix t = Matrix::Zero(n, n);
    for (Label a = 0; a < n; ++a) t(a, a) = phi * data.twist(a);
    const Matrix st = rep.S * t;
    const double defect = max_abs(st * st * st - s2);
    if (!have || defect < best_defect - tol.eps) {
      have = true;
      best_defect = defect;
      best_angle = angle;
      rep.T = t;
    }
  }
  rep.central_phase = std::polar(1.0, best_angle);
  rep.st3_defect = best_defect;
  rep.unitarity_defect = max_abs(rep.S * rep.S.adjoint() - id);
  rep.charge_conjugation_defect = max_abs(s2 - charge);
  rep.s4_defect = max_abs(s2 * s2 - id);
  return rep;
}

Scalar monodromy_with_invertible(const PremodularData& data, Label g, Label rho) {
  require_label(data, g);
  require_label(data, rho);
  auto prod = data.ring.simple_product(g, rho);
  if (!prod) fail(ErrorKind::InvalidArgument, data.ring.name(g) + " is not invertible");
  return data.twist(*prod) / (data.twist(g) * data.twist(rho));
}

std::vector<Label> mutually_transparent(const PremodularData& data, std::span<const Label> subset, Tolerance tol) {
  const FusionRing& ring = data.ring;
  for (Label g : subset) {
    require_label(data, g);
    if (!ring.simple_product(g, ring.dual(g)) || *ring.simple_product(g, ring.dual(g)) != 0) {
      fail(ErrorKind::InvalidArgument, ring.name(g) + " is not invertible");
    }
    if (!near(data.twist(g), Scalar(1.0), tol) && !near(data.twist(g), Scalar(-1.0), tol)) {
      fail(ErrorKind::InvalidArgument, "subset is not symmetric: theta_" + ring.name(g) + " is not +-1");
    }
    for (Label h : subset) {
      if (!near(monodromy_with_invertible(data, g, h), Scalar(1.0), tol)) {
        fail(ErrorKind::InvalidArgument,
             "subset is not symmetric: " + ring.name(g) + " and " + ring.name(h) + " braid nontrivially");
      }
    }
  }
  std::vector<Label> out;
  for (Label rho = 0; rho < data.rank(); ++rho) {
    const bool ok = std::all_of(subset.begin(), subset.end(), [&](Label g) {
      return near(monodromy_with_invertible(data, g, rho), Scalar(1.0), tol);
    });
    if (ok) out.push_back(rho);
  }
  check_closed(data, out, "mutually transparent subcategory");
  return out;
}

CenterSplit split_center(const PremodularData& data, Tolerance tol) {
  CenterSplit split;
  for (Label a : transparent_simples(data, tol)) {
    if (near(data.twist(a), Scalar(1.0), tol)) {
      split.bosons.push_back(a);
    } else if (near(data.twist(a), Scalar(-1.0), tol)) {
      split.fermions.push_back(a);
    } else {
      fail(ErrorKind::Inconsistent, "transparent label " + data.ring.name(a) + " has twist " + fmt(data.twist(a)) +
                                        ", not +-1");
    }
  }
  return split;
}

FixpointReport fermion_fixpoint_diagnostic(const PremodularData& data, Tolerance tol) {
  FixpointReport report;
  const FusionRing& ring = data.ring;
  for (Label g : split_center(data, tol).fermions) {
    auto inv = ring.simple_product(g, ring.dual(g));
    if (!inv || *inv != 0) continue;
    report.fermions_checked.push_back(g);
    for (Label rho = 0; rho < data.rank(); ++rho) {
      auto prod = ring.simple_product(g, rho);
      if (prod && *prod == rho) {
        fail(ErrorKind::Inconsistent, "transparent fermion " + ring.name(g) + " fixes " + ring.name(rho) +
                                          ", which no consistent braided category allows");
      }
    }
  }
  report.vacuous = report.fermions_checked.empty();
  return report;
}

}  // namespace tcat
