#include <gtest/gtest.h>

#include "chernform/curvature.hpp"
#include "chernform/errors.hpp"

namespace chernform {
namespace {

constexpr auto kExact = ScalarMode::Exact;
constexpr auto kFloat = ScalarMode::Float;

Scalar gi(long re, long im = 0) { return Scalar(GaussianRational(re, im)); }

Form dzdzbar(int n, int a, int b, ScalarMode mode = kExact) {
  return wedge(Form::dz(n, a, mode), Form::dzbar(n, b, mode));
}

TEST(Curvature, RankOneScaledFactor) {
  FactorMatrix a(1, 1, 1, kExact);
  a.set(0, 0, Form::dz(1, 1, kExact) * gi(2));
  const CurvatureMatrix omega = bott_chern_curvature(a);
  EXPECT_EQ(omega.at(0, 0), dzdzbar(1, 1, 1) * gi(4));
  EXPECT_TRUE(omega.witnessed());
}

TEST(Curvature, ZeroFactorGivesZero) {
  const CurvatureMatrix omega = bott_chern_curvature(FactorMatrix(3, 2, 2, kExact));
  for (const Form& f : omega.entries()) EXPECT_TRUE(f.is_zero());
}

TEST(Curvature, DiagonalFactor) {
  FactorMatrix a(2, 2, 2, kExact);
  a.set(0, 0, Form::dz(2, 1, kExact));
  a.set(1, 1, Form::dz(2, 2, kExact));
  const CurvatureMatrix omega = bott_chern_curvature(a);
  EXPECT_EQ(omega.at(0, 0), dzdzbar(2, 1, 1));
  EXPECT_EQ(omega.at(1, 1), dzdzbar(2, 2, 2));
  EXPECT_TRUE(omega.at(0, 1).is_zero());
  EXPECT_TRUE(omega.at(1, 0).is_zero());
}

TEST(Curvature, FactorFromTensor) {
  CurvatureTensor t(2, 1, 1, kExact);
  EXPECT_TRUE(factor_from_tensor(t).at(0, 0).is_zero());
  t.at(0, 0, 0) = gi(1);
  EXPECT_EQ(factor_from_tensor(t).at(0, 0), Form::dz(2, 1, kExact));
  t.at(1, 0, 0) = gi(0, 1);
  const FactorMatrix a = factor_from_tensor(t);
  EXPECT_EQ(a.at(0, 0), Form::dz(2, 1, kExact) + Form::dz(2, 2, kExact) * gi(0, 1));
  const CurvatureMatrix omega = bott_chern_curvature(a);
  const Form expected = dzdzbar(2, 1, 1) - dzdzbar(2, 1, 2) * gi(0, 1) + dzdzbar(2, 2, 1) * gi(0, 1) +
                        dzdzbar(2, 2, 2);
  EXPECT_EQ(omega.at(0, 0), expected);
}

TEST(Curvature, FactorEntriesMustBeOneZeroForms) {
  FactorMatrix a(2, 1, 1, kExact);
  EXPECT_THROW(a.set(0, 0, Form::dzbar(2, 1, kExact)), InvalidInput);
  EXPECT_THROW(a.set(0, 0, Form::one(2, kExact)), InvalidInput);
}

TEST(Curvature, EntriesMustBeOneOneForms) {
  std::vector<Form> entries{Form::dz(2, 1, kExact)};
  EXPECT_THROW(CurvatureMatrix(2, 1, entries), InvalidInput);
}

TEST(Curvature, WitnessMustReproduceEntries) {
  FactorMatrix a(2, 1, 1, kExact);
  a.set(0, 0, Form::dz(2, 1, kExact));
  std::vector<Form> wrong{dzdzbar(2, 2, 2)};
  EXPECT_THROW(CurvatureMatrix(2, 1, wrong, a), InvalidInput);
  std::vector<Form> right{dzdzbar(2, 1, 1)};
  EXPECT_NO_THROW(CurvatureMatrix(2, 1, right, a));
}

TEST(CurvatureProperties, SkewHermitianShape) {
  // conj(Omega^i_j) = -Omega^j_i for every Bott-Chern curvature.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const CurvatureTensor t = random_tensor(3, 3, 2, kExact, seed);
    const CurvatureMatrix omega = bott_chern_curvature(factor_from_tensor(t));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_EQ(conjugate(omega.at(i, j)), -omega.at(j, i));
  }
}

TEST(ChangeFrame, IdentityAndScalars) {
  const CurvatureTensor t = random_tensor(2, 2, 2, kExact, 3);
  const CurvatureMatrix omega = bott_chern_curvature(factor_from_tensor(t));
  const CurvatureMatrix same = change_frame(omega, ScalarMatrix::identity(2, kExact));
  EXPECT_EQ(same.entries(), omega.entries());
  EXPECT_TRUE(same.witnessed());

  const CurvatureMatrix line = bott_chern_curvature(factor_from_tensor(random_tensor(2, 1, 2, kExact, 4)));
  ScalarMatrix c(1, 1, kExact);
  c(0, 0) = gi(3, -2);
  EXPECT_EQ(change_frame(line, c).entries(), line.entries());
}

TEST(ChangeFrame, UnitaryKeepsFactoredShape) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (ScalarMode mode : {kExact, kFloat}) {
      const CurvatureMatrix omega = bott_chern_curvature(factor_from_tensor(random_tensor(3, 3, 2, mode, seed)));
      const ScalarMatrix p = random_unitary(3, mode, seed + 100);
      ASSERT_TRUE(is_unitary(p));
      const CurvatureMatrix moved = change_frame(omega, p);
      ASSERT_TRUE(moved.witnessed());
      const CurvatureMatrix rebuilt = bott_chern_curvature(*moved.witness());
      for (std::size_t k = 0; k < moved.entries().size(); ++k) {
        if (mode == kExact) {
          EXPECT_EQ(rebuilt.entries()[k], moved.entries()[k]);
        } else {
          EXPECT_LE(max_abs_difference(rebuilt.entries()[k], moved.entries()[k]), 1e-12 * omega.scale());
        }
      }
    }
  }
}

TEST(ChangeFrame, GeneralFrameDropsWitness) {
  const CurvatureMatrix omega = bott_chern_curvature(factor_from_tensor(random_tensor(2, 2, 2, kFloat, 9)));
  const CurvatureMatrix moved = change_frame(omega, random_invertible(2, 10));
  EXPECT_FALSE(moved.witnessed());
}

TEST(ChangeFrame, SingularRejected) {
  const CurvatureMatrix omega = bott_chern_curvature(factor_from_tensor(random_tensor(2, 2, 2, kExact, 1)));
  ScalarMatrix p(2, 2, kExact);
  p(0, 0) = gi(1);
  p(0, 1) = gi(1);
  p(1, 0) = gi(1);
  p(1, 1) = gi(1);
  EXPECT_THROW(change_frame(omega, p), InvalidInput);
  EXPECT_THROW(change_frame(omega, ScalarMatrix::identity(3, kExact)), InvalidInput);
}

TEST(Griffiths, SingleEntry) {
  CurvatureTensor t(1, 1, 1, kExact);
  t.at(0, 0, 0) = gi(1);
  const std::vector<Scalar> xi{gi(1)};
  const std::vector<Scalar> eta{gi(1)};
  EXPECT_EQ(griffiths_value(t, xi, eta), gi(1));
}

TEST(Griffiths, ZeroTensor) {
  CurvatureTensor t(2, 2, 3, kExact);
  const std::vector<Scalar> xi{gi(1, 2), gi(-3)};
  const std::vector<Scalar> eta{gi(0, 1), gi(5, 5)};
  EXPECT_EQ(griffiths_value(t, xi, eta), gi(0));
}

TEST(Griffiths, LengthMismatchRejected) {
  CurvatureTensor t(2, 2, 1, kExact);
  const std::vector<Scalar> xi{gi(1)};
  const std::vector<Scalar> eta{gi(1), gi(0)};
  EXPECT_THROW(griffiths_value(t, xi, eta), InvalidInput);
}

TEST(GriffithsProperties, RoutesAgreeAndNonnegative) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const int r = 1 + static_cast<int>((seed / 4) % 4);
    const int m = 1 + static_cast<int>((seed / 2) % 5);
    for (ScalarMode mode : {kExact, kFloat}) {
      const CurvatureTensor t = random_tensor(n, r, m, mode, seed);
      const CurvatureTensor vecs = random_tensor(1, 2, std::max(n, r), mode, seed + 7777);
      std::vector<Scalar> xi, eta;
      for (int k = 0; k < r; ++k) xi.push_back(vecs.at(0, 0, k));
      for (int k = 0; k < n; ++k) eta.push_back(vecs.at(0, 1, k));
      const Scalar a = griffiths_contraction(t, xi, eta);
      const Scalar b = griffiths_sum_of_squares(t, xi, eta);
      const double scale = griffiths_scale(t, xi, eta);
      if (mode == kExact) {
        EXPECT_EQ(a, b);
      } else {
        EXPECT_LE(std::abs(a.to_complex() - b.to_complex()), 1e-12 * scale);
      }
      EXPECT_GE(griffiths_value(t, xi, eta).real_d(), -1e-12 * scale);
    }
  }
}

TEST(Random, DeterministicGivenSeed) {
  const CurvatureTensor a = random_tensor(2, 2, 2, kFloat, 5);
  const CurvatureTensor b = random_tensor(2, 2, 2, kFloat, 5);
  const CurvatureTensor c = random_tensor(2, 2, 2, kFloat, 6);
  bool differs = false;
  for (int p = 0; p < 2; ++p)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        EXPECT_EQ(a.at(p, i, k), b.at(p, i, k));
        differs = differs || !(a.at(p, i, k) == c.at(p, i, k));
      }
  EXPECT_TRUE(differs);
}

}  // namespace
}  // namespace chernform
