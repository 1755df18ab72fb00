#include <gtest/gtest.h>

#include "chernform/errors.hpp"
#include "chernform/models.hpp"
#include "chernform/schur.hpp"
#include "oracles.hpp"

namespace chernform {
namespace {

mpz_class number(const ModelManifold& m, std::vector<int> parts) {
  return chern_number(m, Partition(std::move(parts), m.dim()), nullptr);
}

RingElement cvar(int j, int n) { return RingElement::variable(n, j - 1); }

TEST(Models, ProjectiveSpaceNumbers) {
  EXPECT_EQ(number(projective_space(1), {1}), 2);
  EXPECT_EQ(number(projective_space(2), {1, 1}), 9);
  EXPECT_EQ(number(projective_space(2), {2, 0}), 3);
  EXPECT_EQ(number(projective_space(3), {3, 0, 0}), 4);
  EXPECT_EQ(number(projective_space(3), {2, 1, 0}), 24);
  EXPECT_EQ(number(projective_space(3), {1, 1, 1}), 64);
}

TEST(Models, ProjectiveSpaceAgainstBinomialOracle) {
  for (int k = 1; k <= 6; ++k) {
    const ModelManifold cp = projective_space(k);
    for (const Partition& lambda : partitions(k, k))
      EXPECT_EQ(chern_number(cp, lambda), oracle::projective_chern_number(k, lambda.trimmed())) << k << lambda.to_string();
  }
}

TEST(Models, TorusNumbersVanish) {
  for (int k = 1; k <= 4; ++k)
    for (const Partition& lambda : partitions(k, k)) EXPECT_EQ(chern_number(complex_torus(k), lambda), 0);
  const ModelManifold mixed = product(complex_torus(1), projective_space(1));
  for (const Partition& lambda : partitions(2, 2)) EXPECT_EQ(chern_number(mixed, lambda), 0);
}

TEST(Models, Products) {
  const ModelManifold p11 = product(projective_space(1), projective_space(1));
  EXPECT_EQ(p11.dim(), 2);
  EXPECT_EQ(number(p11, {1, 1}), 8);
  EXPECT_EQ(number(p11, {2, 0}), 4);

  const ModelManifold with_point = product(projective_space(2), point());
  EXPECT_EQ(number(with_point, {1, 1}), 9);
  EXPECT_EQ(number(with_point, {2, 0}), 3);

  // CP1 x CP2: c = (1+x)^2 (1+y)^3, integral of x y^2 = 1.
  const ModelManifold p12 = parse_model("CP1xCP2");
  EXPECT_EQ(p12.dim(), 3);
  EXPECT_EQ(number(p12, {3, 0, 0}), 6);  // Euler characteristic 2 * 3
  EXPECT_EQ(number(p12, {1, 1, 1}), 54);  // (2x + 3y)^3 -> 3 * 2 * 9
}

TEST(Models, CatalogFlags) {
  EXPECT_TRUE(projective_space(2).tangent_globally_generated());
  EXPECT_FALSE(projective_space(2).cotangent_globally_generated());
  EXPECT_TRUE(complex_torus(2).cotangent_globally_generated());
  const ModelManifold mixed = product(complex_torus(1), projective_space(1));
  EXPECT_TRUE(mixed.tangent_globally_generated());
  EXPECT_FALSE(mixed.cotangent_globally_generated());
}

TEST(Models, ParseModel) {
  EXPECT_EQ(parse_model("CP3").dim(), 3);
  EXPECT_EQ(parse_model("T2").dim(), 2);
  EXPECT_EQ(parse_model("CP1xT1xCP1").dim(), 3);
  EXPECT_EQ(parse_model("pt").dim(), 0);
  EXPECT_THROW(parse_model("CP0"), InvalidInput);
  EXPECT_THROW(parse_model("S2"), InvalidInput);
  EXPECT_THROW(parse_model(""), InvalidInput);
}

TEST(Models, DualClasses) {
  const ModelManifold cp1 = projective_space(1);
  const auto dual1 = dual_tangent_chern(cp1);
  EXPECT_EQ(dual1[0], cp1.generator(0) * mpq_class(-2));

  const ModelManifold cp2 = projective_space(2);
  const auto dual2 = dual_tangent_chern(cp2);
  EXPECT_EQ(chern_number(cp2, Partition({1, 1}, 2), &dual2), 9);
  EXPECT_EQ(chern_number(cp2, Partition({2, 0}, 2), &dual2), 3);

  const ModelManifold cp3 = projective_space(3);
  const auto dual3 = dual_tangent_chern(cp3);
  for (const Partition& lambda : partitions(3, 3))
    EXPECT_EQ(chern_number(cp3, lambda, &dual3), -chern_number(cp3, lambda));
}

TEST(Models, WeightMismatchRejected) {
  EXPECT_THROW(chern_number(projective_space(3), Partition({1, 1}, 3)), InvalidInput);
}

TEST(NumberBounds, ProjectiveSpace) {
  const NumberBoundsReport report = verify_number_bounds(projective_space(3), false);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.lower, 4);
  EXPECT_EQ(report.upper, 64);
  EXPECT_EQ(report.numbers.size(), 3U);
  EXPECT_FALSE(report.vanishing_applies);
  EXPECT_THROW(verify_number_bounds(projective_space(3), true), InvalidInput);
}

TEST(NumberBounds, TorusSigned) {
  const NumberBoundsReport report = verify_number_bounds(complex_torus(2), true);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.lower, 0);
  EXPECT_EQ(report.upper, 0);
  EXPECT_TRUE(report.vanishing_applies);
}

TEST(NumberBounds, VanishingPropagation) {
  const NumberBoundsReport report = verify_number_bounds(product(complex_torus(1), projective_space(1)), false);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.vanishing_applies);
  EXPECT_TRUE(report.vanishing_pass);
}

TEST(Todd, SeriesCoefficients) {
  const auto t = todd_series(4);
  EXPECT_EQ(t[0], 1);
  EXPECT_EQ(t[1], mpq_class(1, 2));
  EXPECT_EQ(t[2], mpq_class(1, 12));
  EXPECT_EQ(t[3], 0);
  EXPECT_EQ(t[4], mpq_class(-1, 720));
}

TEST(Todd, LowDegreeClosedForms) {
  const int n = 4;
  const RingElement td = todd_polynomial(n);
  const auto weights = chern_weights(n);
  const RingElement c1 = cvar(1, n), c2 = cvar(2, n), c3 = cvar(3, n), c4 = cvar(4, n);
  EXPECT_EQ(td.homogeneous_part(weights, 1), c1 * mpq_class(1, 2));
  EXPECT_EQ(td.homogeneous_part(weights, 2), (c1 * c1 + c2) * mpq_class(1, 12));
  EXPECT_EQ(td.homogeneous_part(weights, 3), c1 * c2 * mpq_class(1, 24));
  EXPECT_EQ(td.homogeneous_part(weights, 4),
            (c1 * c1 * c1 * c1 * mpq_class(-1) + c1 * c1 * c2 * mpq_class(4) + c2 * c2 * mpq_class(3) + c1 * c3 - c4) *
                mpq_class(1, 720));
}

TEST(Todd, MatchesRootProductOracle) {
  for (int n = 1; n <= 6; ++n) {
    const auto e = oracle::elementary_in_roots(n);
    const std::vector<int> ones(static_cast<std::size_t>(n), 1);
    const Polynomial<mpq_class> in_roots = substitute(
        todd_polynomial(n), e, Polynomial<mpq_class>(n), Polynomial<mpq_class>::constant(n, 1),
        [&](const mpq_class& c) { return Polynomial<mpq_class>::constant(n, c); },
        [&](const Polynomial<mpq_class>& a, const Polynomial<mpq_class>& b) { return (a * b).truncated(ones, n); });
    EXPECT_EQ(in_roots.truncated(ones, n), oracle::todd_in_roots(n, n)) << "n=" << n;
  }
}

TEST(Todd, ProjectiveLine) {
  const ModelManifold cp1 = projective_space(1);
  EXPECT_EQ(todd_class(cp1), cp1.one() + cp1.generator(0));
}

TEST(RiemannRoch, ProjectiveSpacesAgainstSectionCounts) {
  for (int n = 1; n <= 4; ++n) {
    const ModelManifold cp = projective_space(n);
    for (long mm = -7; mm <= 7; ++mm)
      EXPECT_EQ(euler_characteristic(cp, cp.generator(0), mm), oracle::projective_chi(n, mm)) << n << " " << mm;
  }
}

TEST(RiemannRoch, ArithmeticGenus) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(euler_characteristic(projective_space(n), RingElement(1), 0), 1);
  EXPECT_EQ(euler_characteristic(complex_torus(2), complex_torus(2).zero(), 0), 0);
  const ModelManifold p11 = parse_model("CP1xCP1");
  EXPECT_EQ(euler_characteristic(p11, p11.zero(), 0), 1);
}

TEST(RiemannRoch, CanonicalOnLine) {
  const ModelManifold cp1 = projective_space(1);
  const RingElement k = parse_line(cp1, "K");
  for (long mm = -5; mm <= 5; ++mm) EXPECT_EQ(euler_characteristic(cp1, k, mm), 1 - 2 * mm);
}

TEST(RiemannRoch, ProductLineBundles) {
  // chi(CP1 x CP2, O(a, b)) = (a + 1) (b + 1)(b + 2) / 2
  const ModelManifold m = parse_model("CP1xCP2");
  for (int a = -3; a <= 3; ++a)
    for (int b = -4; b <= 3; ++b) {
      const RingElement line = parse_line(m, "O(" + std::to_string(a) + "," + std::to_string(b) + ")");
      EXPECT_EQ(euler_characteristic(m, line, 1), oracle::projective_chi(1, a) * oracle::projective_chi(2, b));
    }
}

TEST(RiemannRoch, RejectsNonLinearClass) {
  const ModelManifold cp2 = projective_space(2);
  EXPECT_THROW(euler_characteristic(cp2, cp2.multiply(cp2.generator(0), cp2.generator(0)), 1), InvalidInput);
  EXPECT_THROW(parse_line(cp2, "O(1,2)"), InvalidInput);
  EXPECT_THROW(parse_line(cp2, "L"), InvalidInput);
}

TEST(Kodaira, LeadingCoefficient) {
  EXPECT_EQ(kodaira_leading(projective_space(1)), -2);
  EXPECT_EQ(kodaira_leading(projective_space(2)), mpq_class(9, 2));
  EXPECT_EQ(kodaira_leading(complex_torus(3)), 0);
}

TEST(Kodaira, MatchesFiniteDifferences) {
  // The n-th finite difference of chi(K^m) in m is n! times the leading coefficient.
  for (const char* name : {"CP1", "CP2", "CP3", "CP1xCP1", "CP1xCP2", "T2", "T1xCP1", "CP4"}) {
    const ModelManifold m = parse_model(name);
    const RingElement k = parse_line(m, "K");
    const int n = m.dim();
    mpq_class diff = 0;
    mpz_class binom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j > 0) binom = binom * (n - j + 1) / j;
      const mpq_class term = binom * euler_characteristic(m, k, j);
      diff += ((n - j) % 2 == 0) ? term : mpq_class(-term);
    }
    mpz_class fact = 1;
    for (int j = 2; j <= n; ++j) fact *= j;
    EXPECT_EQ(diff, kodaira_leading(m) * fact) << name;
  }
}

}  // namespace
}  // namespace chernform
