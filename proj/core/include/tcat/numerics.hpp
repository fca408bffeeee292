#pragma once

#include <complex>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace tcat {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Absolute tolerance used for every tolerant comparison in the library.
struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e);
};

inline bool near(Scalar a, Scalar b, Tolerance tol) { return std::abs(a - b) <= tol.eps; }
inline bool near(double a, double b, Tolerance tol) { return std::abs(a - b) <= tol.eps; }

/// Root of unity exp(2*pi*i*num/den), always stored reduced with 0 <= num < den.
class ExactPhase {
 public:
  ExactPhase() = default;
  ExactPhase(long num, long den);

  long num() const { return num_; }
  long den() const { return den_; }
  Scalar value() const;
  ExactPhase inverse() const { return ExactPhase(-num_, den_); }
  bool is_one() const { return num_ == 0; }

  /// Recognises z as a root of unity of order dividing some n <= max_den.
  static std::optional<ExactPhase> recognize(Scalar z, long max_den, Tolerance tol);

  friend bool operator==(const ExactPhase&, const ExactPhase&) = default;
  friend auto operator<=>(const ExactPhase&, const ExactPhase&) = default;

 private:
  long num_ = 0;
  long den_ = 1;
};

ExactPhase phase_mul(ExactPhase a, ExactPhase b);
Scalar phase_value(ExactPhase a);
inline ExactPhase operator*(ExactPhase a, ExactPhase b) { return phase_mul(a, b); }

std::string to_string(ExactPhase p);

/// A scalar that remembers whether it was declared as an exact root of unity.
struct Amplitude {
  Scalar value{1.0, 0.0};
  std::optional<ExactPhase> exact;

  Amplitude() = default;
  Amplitude(Scalar z) : value(z) {}  // NOLINT(google-explicit-constructor)
  Amplitude(ExactPhase p) : value(p.value()), exact(p) {}  // NOLINT(google-explicit-constructor)
};

Amplitude operator*(const Amplitude& a, const Amplitude& b);

struct MatrixChecks {
  bool is_unitary = false;
  bool is_hermitian = false;
  Scalar det{0.0, 0.0};
  int rank = 0;
};

/// Rank by Gaussian elimination with complete pivoting; pivots with
/// magnitude <= tol.eps count as zero.
int rank(const Matrix& m, Tolerance tol);
Scalar determinant(const Matrix& m);
double max_abs(const Matrix& m);
MatrixChecks mat_checks(const Matrix& m, Tolerance tol);

/// Basis of the null space of m (columns), by complete-pivoting elimination.
Matrix null_space(const Matrix& m, Tolerance tol);

}  // namespace tcat
