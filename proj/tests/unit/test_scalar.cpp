#include <gtest/gtest.h>

#include "chernform/errors.hpp"
#include "chernform/scalar.hpp"
#include "chernform/scalar_matrix.hpp"

namespace chernform {
namespace {

Scalar gi(long re, long im = 0) { return Scalar(GaussianRational(re, im)); }

TEST(Scalar, ExactArithmetic) {
  const Scalar a = gi(1, 2);
  const Scalar b = gi(3, -1);
  EXPECT_EQ(a * b, gi(5, 5));
  EXPECT_EQ(a + b, gi(4, 1));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.conj(), gi(1, -2));
  EXPECT_EQ(Scalar::imag_unit(ScalarMode::Exact).pow(2), gi(-1));
  EXPECT_EQ(a.exact().norm(), mpq_class(5));
}

TEST(Scalar, DivisionByZeroRejected) {
  EXPECT_THROW(gi(1) / gi(0), InvalidInput);
}

TEST(Scalar, ModesDoNotMix) {
  const Scalar f = Scalar::one(ScalarMode::Float);
  EXPECT_THROW(gi(1) + f, InvalidInput);
  EXPECT_THROW(gi(1) * f, InvalidInput);
  EXPECT_FALSE(gi(1) == f);
}

TEST(Scalar, DoublesConvertExactly) {
  const Scalar s = Scalar::from_doubles(0.5, -0.25, ScalarMode::Exact);
  EXPECT_EQ(s, Scalar(GaussianRational(mpq_class(1, 2), mpq_class(-1, 4))));
  EXPECT_THROW(Scalar::from_doubles(std::nan(""), 0.0, ScalarMode::Exact), InvalidInput);
  const Scalar back = s.to_mode(ScalarMode::Float);
  EXPECT_EQ(back.to_complex(), std::complex<double>(0.5, -0.25));
}

TEST(ScalarMatrix, DeterminantAndInverseExact) {
  ScalarMatrix m(2, 2, ScalarMode::Exact);
  m(0, 0) = gi(1, 1);
  m(0, 1) = gi(2);
  m(1, 0) = gi(0, 1);
  m(1, 1) = gi(3);
  EXPECT_EQ(determinant(m), gi(3, 1));
  const ScalarMatrix id = m * inverse(m);
  EXPECT_EQ(id.max_abs_difference(ScalarMatrix::identity(2, ScalarMode::Exact)), 0.0);
}

TEST(ScalarMatrix, SingularRejected) {
  ScalarMatrix m(2, 2, ScalarMode::Exact);
  m(0, 0) = gi(1);
  m(0, 1) = gi(2);
  m(1, 0) = gi(2);
  m(1, 1) = gi(4);
  EXPECT_EQ(determinant(m), gi(0));
  EXPECT_THROW(inverse(m), InvalidInput);
  EXPECT_THROW(inverse(m.to_mode(ScalarMode::Float)), InvalidInput);
}

TEST(ScalarMatrix, FloatDeterminantMatchesExact) {
  ScalarMatrix m(3, 3, ScalarMode::Exact);
  long v = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = gi((v * 7) % 5 - 2, (v * 3) % 4 - 1), ++v;
  const Scalar exact = determinant(m);
  const Scalar flt = determinant(m.to_mode(ScalarMode::Float));
  EXPECT_NEAR(std::abs(flt.to_complex() - exact.to_complex()), 0.0, 1e-12);
}

TEST(ScalarMatrix, UnitaryCheck) {
  ScalarMatrix p(2, 2, ScalarMode::Exact);
  p(0, 1) = gi(0, 1);
  p(1, 0) = gi(-1);
  EXPECT_TRUE(is_unitary(p));
  p(1, 1) = gi(1);
  EXPECT_FALSE(is_unitary(p));
}

}  // namespace
}  // namespace chernform
