#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "oracles.hpp"
#include "tcat/catalog.hpp"
#include "tcat/error.hpp"
#include "tcat/premodular.hpp"

namespace tcat {
namespace {

constexpr double kEps = 1e-9;

PremodularData data_of(const std::string& name) { return catalog_get(name).data; }

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::InvalidArgument;
}

TEST(YMatrix, Semion) {
  const Matrix y = ymatrix_from_twists(data_of("semion"));
  EXPECT_LT(max_abs(y - from_rows({{1, 1}, {1, -1}})), kEps);
}

TEST(YMatrix, RepGroupIsOuterProductOfDims) {
  for (const std::string name : {"repS3", "repD4", "repQ8"}) {
    const PremodularData d = data_of(name);
    const Matrix y = ymatrix_from_twists(d);
    for (Label a = 0; a < d.rank(); ++a) {
      for (Label b = 0; b < d.rank(); ++b) EXPECT_NEAR(std::abs(y(a, b) - d.dim(a) * d.dim(b)), 0.0, kEps) << name;
    }
  }
}

TEST(YMatrix, ToricCode) {
  const Matrix y = ymatrix_from_twists(data_of("toric"));
  EXPECT_LT(max_abs(y - from_rows({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}})), kEps);
}

TEST(YMatrix, DeclaredMismatchIsInconsistent) {
  PremodularData d = data_of("semion");
  d.ymatrix = from_rows({{1, 1}, {1, 1}});
  EXPECT_EQ(kind_of([&] { ymatrix_from_twists(d); }), ErrorKind::Inconsistent);
}

TEST(TransparentSimples, Examples) {
  EXPECT_EQ(transparent_simples(data_of("ising")), (std::vector<Label>{0}));
  EXPECT_EQ(transparent_simples(data_of("repS3")), (std::vector<Label>{0, 1, 2}));
  EXPECT_EQ(transparent_simples(data_of("z4metric")), (std::vector<Label>{0, 2}));
}

TEST(TransparentSimples, Z4MatchesBicharacterRadical) {
  // b(j, k) = i^{2jk} = (-1)^{jk}; the radical is {j : jk even for all k}.
  std::vector<Label> radical;
  for (int j = 0; j < 4; ++j) {
    bool ok = true;
    for (int k = 0; k < 4; ++k) ok = ok && (j * k) % 2 == 0;
    if (ok) radical.push_back(j);
  }
  EXPECT_EQ(transparent_simples(data_of("z4metric")), radical);
}

TEST(CenterClosureCheck, Examples) {
  const PremodularData d4 = data_of("repD4");
  const std::vector<Label> all{0, 1, 2, 3, 4};
  EXPECT_NO_THROW(center_closure_check(d4, all));
  const std::vector<Label> z4{0, 2};
  EXPECT_NO_THROW(center_closure_check(data_of("z4metric"), z4));
  const std::vector<Label> forged{0, 1, 2};  // {1, e, m}: e (x) m = f leaves the set
  EXPECT_EQ(kind_of([&] { center_closure_check(data_of("toric"), forged); }), ErrorKind::Inconsistent);
}

TEST(IsModular, Examples) {
  EXPECT_TRUE(is_modular(data_of("ising")).modular);
  const ModularityCertificate s3 = is_modular(data_of("repS3"));
  EXPECT_FALSE(s3.modular);
  EXPECT_EQ(s3.y_rank, 1);
  const ModularityCertificate semion = is_modular(data_of("semion"));
  EXPECT_TRUE(semion.modular);
  EXPECT_EQ(semion.y_rank, 2);
  EXPECT_TRUE(near(mat_checks(ymatrix_from_twists(data_of("semion")), Tolerance()).det, Scalar(-2, 0), Tolerance()));
}

TEST(StAndSl2z, Semion) {
  const ModularRepresentation rep = st_and_sl2z(data_of("semion"));
  const double h = 1 / std::sqrt(2.0);
  EXPECT_LT(max_abs(rep.S - from_rows({{h, h}, {h, -h}})), kEps);
  EXPECT_TRUE(rep.ok(Tolerance()));
}

TEST(StAndSl2z, ToricCodeSquaresToIdentity) {
  const ModularRepresentation rep = st_and_sl2z(data_of("toric"));
  const Matrix expected = from_rows({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}) / 2.0;
  EXPECT_LT(max_abs(rep.S - expected), kEps);
  EXPECT_LT(max_abs(rep.S * rep.S - Matrix::Identity(4, 4)), kEps);
  EXPECT_TRUE(rep.ok(Tolerance()));
}

TEST(StAndSl2z, IsingAgainstOracle) {
  const PremodularData d = data_of("ising");
  const ModularRepresentation rep = st_and_sl2z(d);
  EXPECT_LT(max_abs(rep.S - oracle::ising_s_matrix()), kEps);
  std::vector<std::complex<double>> twists;
  for (Label a = 0; a < d.rank(); ++a) twists.push_back(d.twist(a));
  EXPECT_LT(std::abs(rep.gauss_sum - oracle::gauss_sum(d.dims, twists)), kEps);
  EXPECT_LT(std::abs(rep.gauss_sum - 2.0 * std::polar(1.0, 2 * std::numbers::pi / 16)), kEps);
  EXPECT_TRUE(rep.ok(Tolerance()));
}

TEST(StAndSl2z, GaussSumMatchesOracleOnModularEntries) {
  for (const std::string name : {"semion", "toric", "ising"}) {
    const PremodularData d = data_of(name);
    std::vector<std::complex<double>> twists;
    double global = 0;
    for (Label a = 0; a < d.rank(); ++a) {
      twists.push_back(d.twist(a));
      global += d.dim(a) * d.dim(a);
    }
    const auto g = oracle::gauss_sum(d.dims, twists);
    const ModularRepresentation rep = st_and_sl2z(d);
    EXPECT_LT(std::abs(rep.gauss_sum - g), kEps) << name;
    EXPECT_NEAR(std::abs(g), std::sqrt(global), kEps) << name;
    EXPECT_NEAR(std::abs(rep.central_phase), 1.0, kEps);
  }
}

TEST(StAndSl2z, RejectsNonModular) {
  EXPECT_THROW(st_and_sl2z(data_of("repS3")), Error);
}

TEST(Monodromy, Examples) {
  const PremodularData z4 = data_of("z4metric");
  EXPECT_TRUE(near(monodromy_with_invertible(z4, 2, 1), Scalar(1, 0), Tolerance()));
  for (Label g = 0; g < 4; ++g) EXPECT_TRUE(near(monodromy_with_invertible(z4, g, 0), Scalar(1, 0), Tolerance()));
  EXPECT_TRUE(near(monodromy_with_invertible(data_of("ising"), 1, 2), Scalar(-1, 0), Tolerance()));
}

TEST(MutuallyTransparent, Examples) {
  const std::vector<Label> f{0, 1};
  EXPECT_EQ(mutually_transparent(data_of("ising"), f), (std::vector<Label>{0, 1}));
  const std::vector<Label> unit{0};
  EXPECT_EQ(mutually_transparent(data_of("ising"), unit), (std::vector<Label>{0, 1, 2}));
  const std::vector<Label> half{0, 2};
  EXPECT_EQ(mutually_transparent(data_of("z4metric"), half), (std::vector<Label>{0, 1, 2, 3}));
}

TEST(MutuallyTransparent, RejectsNonSymmetricSubset) {
  const std::vector<Label> s{0, 1, 2, 3};
  EXPECT_THROW(mutually_transparent(data_of("z4metric"), s), Error);
}

TEST(SplitCenter, Examples) {
  const CenterSplit s3 = split_center(data_of("repS3"));
  EXPECT_EQ(s3.bosons, (std::vector<Label>{0, 1, 2}));
  EXPECT_TRUE(s3.fermions.empty());
  const CenterSplit svec = split_center(data_of("svec"));
  EXPECT_EQ(svec.bosons, (std::vector<Label>{0}));
  EXPECT_EQ(svec.fermions, (std::vector<Label>{1}));
  EXPECT_EQ(split_center(data_of("z4metric")).bosons, (std::vector<Label>{0, 2}));
}

TEST(FermionFixpoint, SvecIsingActsFreely) {
  const PremodularData d = data_of("svec_ising");
  const FixpointReport r = fermion_fixpoint_diagnostic(d);
  EXPECT_FALSE(r.vacuous);
  ASSERT_EQ(r.fermions_checked.size(), 1u);
  EXPECT_EQ(d.ring.name(r.fermions_checked[0]), "f.1");
}

TEST(FermionFixpoint, ForgedFixpointIsInconsistent) {
  // Rep(S_3) fusion with theta_z = -1 and a declared symmetric Y: z would be a transparent fermion fixing pi.
  const PremodularData s3 = data_of("repS3");
  Matrix y(3, 3);
  for (Label a = 0; a < 3; ++a) {
    for (Label b = 0; b < 3; ++b) y(a, b) = s3.dim(a) * s3.dim(b);
  }
  const PremodularData forged = make_premodular(s3.ring, {ExactPhase(0, 1), ExactPhase(1, 2), ExactPhase(0, 1)},
                                                std::nullopt, y);
  EXPECT_EQ(kind_of([&] { fermion_fixpoint_diagnostic(forged); }), ErrorKind::Inconsistent);
}

TEST(FermionFixpoint, VacuousWithoutFermions) {
  EXPECT_TRUE(fermion_fixpoint_diagnostic(data_of("repD4")).vacuous);
  EXPECT_TRUE(fermion_fixpoint_diagnostic(data_of("ising")).vacuous);
}

TEST(MakePremodular, SuppliedDimensionsMustMatch) {
  const PremodularData s = data_of("semion");
  EXPECT_THROW(make_premodular(s.ring, s.twists, std::vector<double>{1.0, 2.0}), Error);
}

TEST(MetricQuotientOracle, Z4ClosureTwists) {
  // q(j) = i^{j^2}: exponents j^2 mod 4 over denominator 4.
  const auto t = oracle::metric_quotient_twists(4, {0, 1, 0, 1}, 4, {0, 2});
  EXPECT_EQ(t, (std::vector<long>{0, 1}));
}

class CatalogPremodular : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogPremodular, TwistAndYInvariants) {
  const PremodularData d = data_of(GetParam());
  EXPECT_TRUE(validate_premodular(d).empty());
  const Matrix y = ymatrix_from_twists(d);
  for (Label a = 0; a < d.rank(); ++a) {
    EXPECT_NEAR(std::abs(d.twist(a)), 1.0, kEps);
    EXPECT_TRUE(near(d.twist(a), d.twist(d.ring.dual(a)), Tolerance()));
    EXPECT_EQ(y(0, a), Scalar(d.dim(a)));
    for (Label b = 0; b < d.rank(); ++b) {
      EXPECT_LT(std::abs(y(a, b) - y(b, a)), kEps);
      EXPECT_LT(std::abs(y(d.ring.dual(a), b) - std::conj(y(a, b))), kEps);
    }
  }
}

TEST_P(CatalogPremodular, CenterClosedAndCriteriaAgree) {
  const PremodularData d = data_of(GetParam());
  const auto t = transparent_simples(d);
  EXPECT_NO_THROW(center_closure_check(d, t));
  const ModularityCertificate m = is_modular(d);
  EXPECT_EQ(m.modular, m.y_rank == d.rank());
  EXPECT_EQ(m.modular, t.size() == 1);
  if (m.modular) {
    const ModularRepresentation rep = st_and_sl2z(d);
    EXPECT_TRUE(rep.ok(Tolerance()));
  }
}

INSTANTIATE_TEST_SUITE_P(All, CatalogPremodular, ::testing::ValuesIn(catalog_names()));

}  // namespace
}  // namespace tcat
