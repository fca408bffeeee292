#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "generators.hpp"
#include "tcat/error.hpp"
#include "tcat/numerics.hpp"

namespace tcat {
namespace {

TEST(ExactPhase, StoredReduced) {
  const ExactPhase p(6, 8);
  EXPECT_EQ(p.num(), 3);
  EXPECT_EQ(p.den(), 4);
  const ExactPhase q(-1, 4);
  EXPECT_EQ(q.num(), 3);
  EXPECT_EQ(q.den(), 4);
  EXPECT_EQ(ExactPhase(5, 5), ExactPhase(0, 1));
}

TEST(ExactPhase, RejectsNonPositiveDenominator) {
  EXPECT_THROW(ExactPhase(1, 0), Error);
  EXPECT_THROW(ExactPhase(1, -3), Error);
}

TEST(PhaseMul, Examples) {
  EXPECT_EQ(phase_mul(ExactPhase(1, 4), ExactPhase(1, 4)), ExactPhase(1, 2));
  EXPECT_EQ(phase_mul(ExactPhase(0, 1), ExactPhase(3, 8)), ExactPhase(3, 8));
  EXPECT_EQ(phase_mul(ExactPhase(3, 4), ExactPhase(1, 2)), ExactPhase(1, 4));
}

TEST(PhaseValue, Examples) {
  const Tolerance tol;
  EXPECT_TRUE(near(phase_value(ExactPhase(1, 2)), Scalar(-1, 0), tol));
  EXPECT_TRUE(near(phase_value(ExactPhase(1, 4)), Scalar(0, 1), tol));
  EXPECT_TRUE(near(phase_value(ExactPhase(1, 3)), Scalar(-0.5, std::sqrt(3.0) / 2), tol));
}

TEST(PhaseRecognize, FindsSmallestOrder) {
  const Tolerance tol;
  auto p = ExactPhase::recognize(Scalar(0, -1), 8, tol);
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, ExactPhase(3, 4));
  EXPECT_FALSE(ExactPhase::recognize(std::polar(1.0, 1.0), 12, tol));
  EXPECT_FALSE(ExactPhase::recognize(Scalar(2, 0), 12, tol));
}

TEST(MatChecks, Examples) {
  const Tolerance tol;
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  const MatrixChecks a = mat_checks(h, tol);
  EXPECT_TRUE(near(a.det, Scalar(-2, 0), tol));
  EXPECT_EQ(a.rank, 2);
  EXPECT_TRUE(a.is_hermitian);
  EXPECT_FALSE(a.is_unitary);

  EXPECT_TRUE(mat_checks(Matrix::Identity(3, 3), tol).is_unitary);

  Matrix ones = Matrix::Ones(2, 2);
  EXPECT_EQ(mat_checks(ones, tol).rank, 1);
}

TEST(MatChecks, RankRespectsPivotThreshold) {
  Matrix m(2, 2);
  m << 1, 0, 0, 1e-12;
  EXPECT_EQ(rank(m, Tolerance(1e-9)), 1);
  EXPECT_EQ(rank(m, Tolerance(1e-15)), 2);
}

TEST(NullSpace, SpansKernel) {
  Matrix m(2, 3);
  m << 1, 2, 3, 2, 4, 6;
  const Matrix n = null_space(m, Tolerance());
  EXPECT_EQ(n.cols(), 2);
  EXPECT_LT(max_abs(m * n), 1e-12);
  EXPECT_EQ(rank(n, Tolerance()), 2);
}

TEST(NumericsProperty, PhaseMulGroupLaws) {
  testing::Rng rng(20240601);
  const Tolerance tol;
  for (int i = 0; i < 500; ++i) {
    const ExactPhase a = testing::random_exact_phase(rng);
    const ExactPhase b = testing::random_exact_phase(rng);
    const ExactPhase c = testing::random_exact_phase(rng);
    EXPECT_EQ(phase_mul(phase_mul(a, b), c), phase_mul(a, phase_mul(b, c)));
    EXPECT_EQ(phase_mul(a, b), phase_mul(b, a));
    EXPECT_TRUE(near(phase_value(phase_mul(a, b)), phase_value(a) * phase_value(b), tol));
    EXPECT_TRUE(phase_mul(a, a.inverse()).is_one());
    const ExactPhase ab = phase_mul(a, b);
    EXPECT_GE(ab.num(), 0);
    EXPECT_LT(ab.num(), ab.den());
    EXPECT_EQ(std::gcd(ab.num(), ab.den()), 1);
  }
}

TEST(NumericsProperty, DeterminantMultiplicativeOnUnitaries) {
  testing::Rng rng(77);
  const Tolerance tol;
  for (int i = 0; i < 100; ++i) {
    const Matrix u = testing::random_unitary(4, rng);
    const Matrix v = testing::random_unitary(4, rng);
    EXPECT_TRUE(mat_checks(u, tol).is_unitary);
    EXPECT_LE(std::abs(determinant(u * v) - determinant(u) * determinant(v)), tol.eps * 4);
    EXPECT_NEAR(std::abs(determinant(u)), 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace tcat
