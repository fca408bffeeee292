#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <tuple>

#include "generators.hpp"
#include "tcat/catalog.hpp"
#include "tcat/error.hpp"
#include "tcat/premodular.hpp"
#include "tcat/skeletal.hpp"

namespace tcat {
namespace {

constexpr double kEps = 1e-9;

FiniteAbelianGroup cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteAbelianGroup(t);
}

Amplitude one3(int, int, int) { return Amplitude(ExactPhase(0, 1)); }

const SkeletalData& skeletal_of(const Category& c) { return *c.skeletal; }

TEST(Pentagon, IsingPasses) {
  const Category c = ising_category();
  const CoherenceReport r = check_pentagon(skeletal_of(c));
  EXPECT_TRUE(r.ok);
  EXPECT_GT(r.equations, 0u);
  EXPECT_LE(r.worst, kEps);
}

TEST(Pentagon, TrivialFOnToricPasses) { EXPECT_TRUE(check_pentagon(skeletal_of(catalog_get("toric"))).ok); }

TEST(Pentagon, FlippedSemionAssociatorIsDetectedByHexagon) {
  // With F^{sss} = +1 the associator is the trivial 3-cocycle, so every pentagon holds;
  // the braiding R(s, s) = i then violates the hexagon.
  const Category bad = build_pointed("semion_flipped", {"1", "s"}, cyclic(2), one3,
                                     [](int a, int b) { return Amplitude(ExactPhase(a * b, 4)); });
  EXPECT_TRUE(check_pentagon(skeletal_of(bad)).ok);
  EXPECT_FALSE(check_hexagon(skeletal_of(bad)).ok);
  EXPECT_TRUE(check_hexagon(skeletal_of(catalog_get("semion"))).ok);
}

TEST(Pentagon, PerturbedIsingFails) {
  const Category c = ising_category();
  auto f = c.skeletal->f_symbols();
  f[FKey{2, 2, 2, 2, 1, 1}] = Amplitude(Scalar(1 / std::sqrt(2.0)));
  const SkeletalData bad(c.data.ring, f, c.skeletal->r_symbols(), true);
  const CoherenceReport r = check_pentagon(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_GT(r.worst, 0.1);
  EXPECT_FALSE(r.worst_at.empty());
}

TEST(Hexagon, RepS3FlipEigenvalues) {
  const Category c = catalog_get("repS3");
  const SkeletalData& sk = skeletal_of(c);
  EXPECT_LT(std::abs(sk.R(2, 2, 0) - 1.0), kEps);
  EXPECT_LT(std::abs(sk.R(2, 2, 1) + 1.0), kEps);
  EXPECT_LT(std::abs(sk.R(2, 2, 2) - 1.0), kEps);
  EXPECT_TRUE(check_pentagon(sk).ok);
  EXPECT_TRUE(check_hexagon(sk).ok);
}

TEST(Hexagon, PointedZ4Passes) { EXPECT_TRUE(check_hexagon(skeletal_of(catalog_get("z4metric"))).ok); }

TEST(Hexagon, Z2WithImaginaryBraidingFails) {
  const Category bad = build_pointed("z2i", {"1", "g"}, cyclic(2), one3,
                                     [](int a, int b) { return Amplitude(ExactPhase(a * b, 4)); });
  const CoherenceReport r = check_hexagon(skeletal_of(bad));
  EXPECT_FALSE(r.ok);
  EXPECT_GT(r.worst, 1.0);
}

TEST(Normalization, DetectsNonUnitaryR) {
  const Category c = catalog_get("z4metric");
  auto r = c.skeletal->r_symbols();
  r[RKey{1, 1, 2}] = Amplitude(Scalar(2.0));
  const SkeletalData bad(c.data.ring, c.skeletal->f_symbols(), r, true);
  EXPECT_FALSE(check_normalization(bad).ok);
}

TEST(TwistFromR, Examples) {
  const Category semion = catalog_get("semion");
  const auto t = twist_from_R(skeletal_of(semion), semion.data.dims);
  EXPECT_LT(std::abs(t[1] - Scalar(0, 1)), kEps);
  EXPECT_LT(std::abs(t[0] - 1.0), kEps);
  const Category s3 = catalog_get("repS3");
  const auto ts3 = twist_from_R(skeletal_of(s3), s3.data.dims);
  EXPECT_LT(std::abs(ts3[2] - 1.0), kEps);
}

TEST(YFromR, Examples) {
  const Category semion = catalog_get("semion");
  const Matrix y = ymatrix_from_R(skeletal_of(semion), semion.data.dims);
  EXPECT_LT(std::abs(y(1, 1) + 1.0), kEps);
  const Category toric = catalog_get("toric");
  const Matrix yt = ymatrix_from_R(skeletal_of(toric), toric.data.dims);
  EXPECT_LT(std::abs(yt(1, 2) + 1.0), kEps);
  for (Label a = 0; a < 4; ++a) EXPECT_LT(std::abs(yt(a, 0) - 1.0), kEps);
}

TEST(MonodromyTrivial, Examples) {
  const SkeletalData z4 = skeletal_of(catalog_get("z4metric"));
  for (Label j = 0; j < 4; ++j) EXPECT_TRUE(monodromy_trivial(z4, 2, j));
  EXPECT_FALSE(monodromy_trivial(z4, 1, 1));
  const SkeletalData ising = skeletal_of(ising_category());
  EXPECT_FALSE(monodromy_trivial(ising, 1, 2));
  for (Label a = 0; a < 3; ++a) EXPECT_TRUE(monodromy_trivial(ising, 0, a));
}

TEST(SkeletalData, RejectsMissingR) {
  const Category c = catalog_get("semion");
  auto r = c.skeletal->r_symbols();
  r.erase(RKey{1, 1, 0});
  EXPECT_THROW((void)SkeletalData(c.data.ring, c.skeletal->f_symbols(), r, true), Error);
}

TEST(SkeletalData, RejectsInadmissibleF) {
  const Category c = catalog_get("semion");
  auto f = c.skeletal->f_symbols();
  f[FKey{1, 1, 1, 0, 0, 0}] = Amplitude(Scalar(1.0));
  EXPECT_THROW((void)SkeletalData(c.data.ring, f, c.skeletal->r_symbols(), true), Error);
}

class CatalogSkeletal : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogSkeletal, CoherentAndAgreesWithPremodularTier) {
  const Category c = catalog_get(GetParam());
  ASSERT_TRUE(c.skeletal);
  const SkeletalData& sk = *c.skeletal;
  EXPECT_TRUE(check_normalization(sk).ok);
  EXPECT_TRUE(check_pentagon(sk).ok);
  EXPECT_TRUE(check_hexagon(sk).ok);
  const auto t = twist_from_R(sk, c.data.dims);
  for (Label a = 0; a < c.data.rank(); ++a) EXPECT_LT(std::abs(t[a] - c.data.twist(a)), kEps) << a;
  EXPECT_LT(max_abs(ymatrix_from_R(sk, c.data.dims) - ymatrix_from_twists(c.data)), kEps);

  std::vector<Label> skeletal_center;
  for (Label a = 0; a < c.data.rank(); ++a) {
    bool all = true;
    for (Label b = 0; b < c.data.rank(); ++b) all = all && monodromy_trivial(sk, a, b);
    if (all) skeletal_center.push_back(a);
  }
  EXPECT_EQ(skeletal_center, transparent_simples(c.data));
}

TEST_P(CatalogSkeletal, RandomVertexGaugeLeavesInvariantsFixed) {
  const Category c = catalog_get(GetParam());
  const SkeletalData& sk = *c.skeletal;
  testing::Rng rng(4242 + std::hash<std::string>{}(GetParam()) % 1000);
  const auto t0 = twist_from_R(sk, c.data.dims);
  const Matrix y0 = ymatrix_from_R(sk, c.data.dims);
  for (int trial = 0; trial < 3; ++trial) {
    std::map<std::tuple<Label, Label, Label>, Scalar> u;
    for (const FusionTriple& tr : sk.ring().triples()) {
      u[{tr.a, tr.b, tr.c}] = (tr.a == 0 || tr.b == 0) ? Scalar(1.0) : testing::random_phase(rng);
    }
    const SkeletalData g = gauge_transform(sk, [&](Label a, Label b, Label x) { return u.at({a, b, x}); });
    EXPECT_TRUE(check_pentagon(g, Tolerance(1e-8)).ok);
    EXPECT_TRUE(check_hexagon(g, Tolerance(1e-8)).ok);
    const auto t = twist_from_R(g, c.data.dims);
    for (std::size_t a = 0; a < t.size(); ++a) EXPECT_LT(std::abs(t[a] - t0[a]), 1e-8);
    EXPECT_LT(max_abs(ymatrix_from_R(g, c.data.dims) - y0), 1e-8);
  }
}

INSTANTIATE_TEST_SUITE_P(All, CatalogSkeletal, ::testing::ValuesIn(catalog_names()));

TEST(GaugeTransform, PreservesFailureOfBrokenData) {
  const Category bad = build_pointed("z2i", {"1", "g"}, cyclic(2), one3,
                                     [](int a, int b) { return Amplitude(ExactPhase(a * b, 4)); });
  testing::Rng rng(9);
  const Scalar p = testing::random_phase(rng);
  const SkeletalData g = gauge_transform(*bad.skeletal, [&](Label a, Label b, Label) {
    return (a == 1 && b == 1) ? p : Scalar(1.0);
  });
  EXPECT_TRUE(check_pentagon(g).ok);
  EXPECT_FALSE(check_hexagon(g).ok);
}

}  // namespace
}  // namespace tcat
