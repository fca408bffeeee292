#include "tcat/numerics.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "tcat/error.hpp"

namespace tcat {

Tolerance::Tolerance(double e) : eps(e) {
  if (!(e > 0.0) || !std::isfinite(e)) {
    fail(ErrorKind::InvalidArgument, "tolerance must be a positive finite number");
  }
}

ExactPhase::ExactPhase(long num, long den) {
  if (den <= 0) fail(ErrorKind::InvalidArgument, "phase denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Scalar ExactPhase::value() const {
  // Exact values on the axes keep products like i*i from drifting.
  if (num_ == 0) return {1.0, 0.0};
  if (2 * num_ == den_) return {-1.0, 0.0};
  if (4 * num_ == den_) return {0.0, 1.0};
  if (4 * num_ == 3 * den_) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  return {std::cos(angle), std::sin(angle)};
}

std::optional<ExactPhase> ExactPhase::recognize(Scalar z, long max_den, Tolerance tol) {
  if (std::abs(std::abs(z) - 1.0) > tol.eps) return std::nullopt;
  const double turns = std::arg(z) / (2.0 * std::numbers::pi);
  for (long n = 1; n <= max_den; ++n) {
    const long k = std::lround(turns * static_cast<double>(n));
    ExactPhase candidate(k, n);
    if (std::abs(candidate.value() - z) <= tol.eps) return candidate;
  }
  return std::nullopt;
}

ExactPhase phase_mul(ExactPhase a, ExactPhase b) {
  const long den = std::lcm(a.den(), b.den());
  return ExactPhase(a.num() * (den / a.den()) + b.num() * (den / b.den()), den);
}

Scalar phase_value(ExactPhase a) { return a.value(); }

std::string to_string(ExactPhase p) {
  return "exp(2pi i " + std::to_string(p.num()) + "/" + std::to_string(p.den()) + ")";
}

Amplitude operator*(const Amplitude& a, const Amplitude& b) {
  if (a.exact && b.exact) return Amplitude(*a.exact * *b.exact);
  return Amplitude(a.value * b.value);
}

namespace {

// Row-reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<int> row_reduce(Matrix& m, Tolerance tol) {
  std::vector<int> pivots;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index best = r;
    double best_abs = std::abs(m(r, c));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (std::abs(m(i, c)) > best_abs) {
        best = i;
        best_abs = std::abs(m(i, c));
      }
    }
    if (best_abs <= tol.eps) continue;
    m.row(r).swap(m.row(best));
    m.row(r) /= m(r, c);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != r && m(i, c) != Scalar(0.0)) m.row(i) -= m(i, c) * m.row(r);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const Matrix& m, Tolerance tol) {
  // Complete pivoting: choose the largest remaining entry each step.
  Matrix a = m;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  int r = 0;
  for (Eigen::Index step = 0; step < std::min(rows, cols); ++step) {
    Eigen::Index pi = step, pj = step;
    double best = -1.0;
    for (Eigen::Index i = step; i < rows; ++i) {
      for (Eigen::Index j = step; j < cols; ++j) {
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pi = i;
          pj = j;
        }
      }
    }
    if (best <= tol.eps) break;
    a.row(step).swap(a.row(pi));
    a.col(step).swap(a.col(pj));
    for (Eigen::Index i = step + 1; i < rows; ++i) {
      const Scalar factor = a(i, step) / a(step, step);
      a.row(i).tail(cols - step) -= factor * a.row(step).tail(cols - step);
    }
    ++r;
  }
  return r;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (m.rows() == 0) return {1.0, 0.0};
  return m.fullPivLu().determinant();
}

double max_abs(const Matrix& m) {
  double out = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out = std::max(out, std::abs(m(i, j)));
  }
  return out;
}

MatrixChecks mat_checks(const Matrix& m, Tolerance tol) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidArgument, "mat_checks expects a square matrix");
  MatrixChecks out;
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  out.is_unitary = max_abs(m * m.adjoint() - id) <= tol.eps;
  out.is_hermitian = max_abs(m - m.adjoint()) <= tol.eps;
  out.det = determinant(m);
  out.rank = rank(m, tol);
  return out;
}

Matrix null_space(const Matrix& m, Tolerance tol) {
  Matrix a = m;
  const std::vector<int> pivots = row_reduce(a, tol);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  }
  Matrix basis = Matrix::Zero(cols, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Eigen::Index fc = free[k];
    const auto col = static_cast<Eigen::Index>(k);
    basis(fc, col) = 1.0;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], col) = -a(static_cast<Eigen::Index>(r), fc);
    }
  }
  return basis;
}

}  // namespace tcat
