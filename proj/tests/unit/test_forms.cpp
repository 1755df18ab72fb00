#include <gtest/gtest.h>

#include <random>

#include "chernform/errors.hpp"
#include "chernform/form.hpp"
#include "chernform/sampling.hpp"
#include "oracles.hpp"

namespace chernform {
namespace {

constexpr auto kExact = ScalarMode::Exact;
constexpr auto kFloat = ScalarMode::Float;

Scalar gi(long re, long im = 0) { return Scalar(GaussianRational(re, im)); }

Form random_form(int n, ScalarMode mode, std::mt19937_64& rng, int p, int q, int terms) {
  std::uniform_int_distribution<int> coord(0, n - 1);
  std::uniform_int_distribution<long> value(-4, 4);
  Form f(n, mode);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    while (m.p() < p) m.dz = static_cast<std::uint16_t>(m.dz | (1U << coord(rng)));
    while (m.q() < q) m.dzbar = static_cast<std::uint16_t>(m.dzbar | (1U << coord(rng)));
    f.add_term(m, gi(value(rng), value(rng)).to_mode(mode));
  }
  return f;
}

TEST(Form, ZeroCoefficientsAreNotStored) {
  Form f = Form::dz(3, 1, kExact);
  f.add_term(make_monomial(3, {1}, {}), gi(-1));
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.size(), 0U);
}

TEST(Form, MonomialIndicesValidated) {
  EXPECT_THROW(make_monomial(3, {2, 1}, {}), InvalidInput);
  EXPECT_THROW(make_monomial(3, {4}, {}), InvalidInput);
  EXPECT_THROW(make_monomial(3, {1, 1}, {}), InvalidInput);
  EXPECT_THROW(Form(15, kExact), InvalidInput);
  EXPECT_NO_THROW(Form(14, kExact));
}

TEST(Form, WedgeOfOneFormsAnticommutes) {
  const Form a = Form::dz(2, 1, kExact);
  const Form b = Form::dz(2, 2, kExact);
  EXPECT_EQ(wedge(a, b), -wedge(b, a));
  EXPECT_TRUE(wedge(a, a).is_zero());
}

TEST(Form, EvenFormsCommute) {
  const Form a = wedge(Form::dz(2, 1, kExact), Form::dzbar(2, 1, kExact));
  const Form b = wedge(Form::dz(2, 2, kExact), Form::dzbar(2, 2, kExact));
  EXPECT_EQ(wedge(a, b), wedge(b, a));
}

TEST(Form, WedgeSignMatchesInversionCount) {
  // dz1 ^ (dzbar1 ^ dz2) = - dz1 ^ dz2 ^ dzbar1
  const Form rhs = wedge(Form::dzbar(2, 1, kExact), Form::dz(2, 2, kExact));
  const Form product = wedge(Form::dz(2, 1, kExact), rhs);
  ASSERT_EQ(product.size(), 1U);
  EXPECT_EQ(product.coefficient(make_monomial(2, {1, 2}, {1})), gi(-1));
}

TEST(Form, ConjugateExamples) {
  const Form i_dz_dzbar = wedge(Form::dz(3, 1, kExact), Form::dzbar(3, 1, kExact)) * gi(0, 1);
  EXPECT_EQ(conjugate(i_dz_dzbar), i_dz_dzbar);
  EXPECT_EQ(conjugate(Form::dz(3, 1, kExact)), Form::dzbar(3, 1, kExact));
  const Form dz12 = wedge(Form::dz(3, 1, kExact), Form::dz(3, 2, kExact));
  const Form c = conjugate(dz12);
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c.coefficient(make_monomial(3, {}, {1, 2})), gi(1));
}

TEST(Form, EvaluateExamples) {
  const int n = 3;
  const Form phi = wedge(Form::dz(n, 1, kExact), Form::dzbar(n, 1, kExact)) * gi(0, 1);
  const std::vector<TangentVector> e1{{gi(1), gi(0), gi(0)}};
  const std::vector<TangentVector> e2{{gi(0), gi(1), gi(0)}};
  EXPECT_EQ(evaluate(phi, e1), gi(1));
  EXPECT_EQ(evaluate(phi, e2), gi(0));

  const Form psi = wedge(Form::dz(2, 1, kExact), Form::dz(2, 2, kExact));
  const Form phi2 = wedge(psi, conjugate(psi)) * gi(0, 1).pow(4);
  const std::vector<TangentVector> id{{gi(1), gi(0)}, {gi(0), gi(1)}};
  EXPECT_EQ(evaluate(phi2, id), gi(1));
}

TEST(Form, EvaluateRejectsBadInput) {
  const Form mixed = Form::dz(2, 1, kExact) + wedge(Form::dz(2, 1, kExact), Form::dzbar(2, 2, kExact));
  const std::vector<TangentVector> one{{gi(1), gi(0)}};
  EXPECT_THROW(evaluate(mixed, one), InvalidInput);
  const Form phi = wedge(Form::dz(2, 1, kExact), Form::dzbar(2, 1, kExact));
  EXPECT_THROW(evaluate(phi, std::vector<TangentVector>{}), InvalidInput);
  const std::vector<TangentVector> wrong_len{{gi(1)}};
  EXPECT_THROW(evaluate(phi, wrong_len), InvalidInput);
  const std::vector<TangentVector> wrong_mode{{Scalar(std::complex<double>(1.0, 0.0)), Scalar(std::complex<double>(0.0, 0.0))}};
  EXPECT_THROW(evaluate(phi, wrong_mode), InvalidInput);
}

TEST(Form, MixedModesRejected) {
  EXPECT_THROW(wedge(Form::dz(2, 1, kExact), Form::dz(2, 2, kFloat)), InvalidInput);
  EXPECT_THROW(wedge(Form::dz(2, 1, kExact), Form::dz(3, 2, kExact)), InvalidInput);
  EXPECT_THROW(Form::dz(2, 1, kExact) + Form::dz(2, 1, kFloat), InvalidInput);
}

TEST(FormProperties, WedgeMatchesBubbleSortOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const Form a = random_form(n, kExact, rng, trial % 3, (trial / 3) % 3, 3);
    const Form b = random_form(n, kExact, rng, (trial / 2) % 3, trial % 2, 3);
    EXPECT_EQ(wedge(a, b), oracle::wedge_by_sorting(a, b));
  }
}

TEST(FormProperties, GradedAnticommutativityBothModes) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4;
    const int pa = trial % 3, qa = (trial / 3) % 2, pb = (trial / 2) % 2, qb = trial % 2;
    for (ScalarMode mode : {kExact, kFloat}) {
      const Form a = random_form(n, mode, rng, pa, qa, 3);
      const Form b = random_form(n, mode, rng, pb, qb, 3);
      const Form ab = wedge(a, b);
      const Form ba = wedge(b, a);
      const bool odd = ((pa + qa) * (pb + qb)) % 2 == 1;
      const Form expected = odd ? -ba : ba;
      if (mode == kExact) {
        EXPECT_EQ(ab, expected);
      } else {
        EXPECT_LE(max_abs_difference(ab, expected), 1e-12);
      }
    }
  }
}

TEST(FormProperties, AssociativityExact) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Form a = random_form(5, kExact, rng, 1, trial % 2, 3);
    const Form b = random_form(5, kExact, rng, trial % 2, 1, 3);
    const Form c = random_form(5, kExact, rng, 1, 1, 2);
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  }
}

TEST(FormProperties, ConjugationIsInvolutionAndDistributes) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Form a = random_form(4, kExact, rng, trial % 3, (trial + 1) % 3, 3);
    const Form b = random_form(4, kExact, rng, 1, trial % 2, 3);
    EXPECT_EQ(conjugate(conjugate(a)), a);
    EXPECT_EQ(conjugate(wedge(a, b)), wedge(conjugate(a), conjugate(b)));
  }
}

TEST(FormProperties, RealFormsEvaluateToReals) {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<long> value(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3;
    const int p = 1 + trial % 3;
    Form raw = random_form(n, kExact, rng, p, p, 4);
    const Form phi = raw + conjugate(raw);
    ASSERT_EQ(conjugate(phi), phi);
    std::vector<TangentVector> xs(static_cast<std::size_t>(p));
    for (auto& v : xs)
      for (int k = 0; k < n; ++k) v.push_back(gi(value(rng), value(rng)));
    EXPECT_EQ(sgn(evaluate(phi, xs).exact().im()), 0);

    const Form phi_f = phi.to_mode(kFloat);
    std::vector<TangentVector> xs_f;
    for (const auto& v : xs) {
      TangentVector w;
      for (const auto& s : v) w.push_back(s.to_mode(kFloat));
      xs_f.push_back(w);
    }
    EXPECT_LE(std::abs(evaluate(phi_f, xs_f).imag_d()), 1e-10 * phi.scale() * 1e3);
  }
}

TEST(FormProperties, TypeSixFormsAreSquares) {
  // (sqrt(-1))^{p^2} psi ^ conj(psi) evaluates to |psi(X)|^2.
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<long> value(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4;
    const int p = 1 + trial % 3;
    const Form psi = random_form(n, kExact, rng, p, 0, 4);
    const Form phi = wedge(psi, conjugate(psi)) * gi(0, 1).pow(static_cast<unsigned>(p * p));
    std::vector<TangentVector> xs(static_cast<std::size_t>(p));
    for (auto& v : xs)
      for (int k = 0; k < n; ++k) v.push_back(gi(value(rng), value(rng)));
    // pairing(psi, X) = sum_H psi_H det(X rows H)
    Scalar pairing = gi(0);
    for (const auto& [m, c] : psi.terms()) {
      std::vector<int> rows;
      for (int k = 0; k < n; ++k)
        if ((m.dz >> k) & 1U) rows.push_back(k);
      ScalarMatrix mat(static_cast<std::size_t>(p), static_cast<std::size_t>(p), kExact);
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) mat(a, b) = xs[b][rows[a]];
      pairing += c * determinant(mat);
    }
    const Scalar value_at = evaluate(phi, xs);
    EXPECT_EQ(value_at, Scalar(GaussianRational(pairing.exact().norm())));
  }
}

TEST(FormProperties, ProductOfTypeSixFormsIsNonnegative) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Form psi1 = random_form(4, kFloat, rng, 1, 0, 3);
    const Form psi2 = random_form(4, kFloat, rng, 1, 0, 3);
    const Scalar i = Scalar::imag_unit(kFloat);
    const Form phi1 = wedge(psi1, conjugate(psi1)) * i;
    const Form phi2 = wedge(psi2, conjugate(psi2)) * i;
    const VerdictReport r = nonnegative_sampled(wedge(phi1, phi2), {50, static_cast<std::uint64_t>(trial), 1e-9});
    EXPECT_TRUE(r.pass) << r.min_value;
  }
}

TEST(Sampling, ZeroFormPasses) {
  const VerdictReport r = nonnegative_sampled(Form(3, kFloat), {20, 1, 1e-9});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.min_value, 0.0);
}

TEST(Sampling, PositiveOneFormPassesNegativeFails) {
  const Form phi = wedge(Form::dz(3, 1, kFloat), Form::dzbar(3, 1, kFloat)) * Scalar::imag_unit(kFloat);
  const VerdictReport good = nonnegative_sampled(phi, {50, 7, 1e-9});
  EXPECT_TRUE(good.pass);
  EXPECT_GE(good.min_value, 0.0);

  const VerdictReport bad = nonnegative_sampled(-phi, {50, 7, 1e-9});
  EXPECT_FALSE(bad.pass);
  EXPECT_LT(bad.min_value, 0.0);
  ASSERT_EQ(bad.witness.size(), 1U);
  // The witness reproduces the reported minimum: -|X^1|^2.
  EXPECT_NEAR(bad.min_value, -std::norm(bad.witness[0][0]), 1e-12);
}

TEST(Sampling, DeterministicGivenSeed) {
  const Form phi = wedge(Form::dz(3, 1, kFloat) + Form::dz(3, 2, kFloat), Form::dzbar(3, 3, kFloat));
  const Form real = phi + conjugate(phi);
  const VerdictReport a = nonnegative_sampled(real, {40, 99, 1e-9});
  const VerdictReport b = nonnegative_sampled(real, {40, 99, 1e-9});
  EXPECT_EQ(a.min_value, b.min_value);
  EXPECT_EQ(a.witness, b.witness);
  const VerdictReport c = nonnegative_sampled(real, {40, 100, 1e-9});
  EXPECT_NE(a.min_value, c.min_value);
}

TEST(Sampling, NonRealFormRejectedWithDiagnostic) {
  const Form phi = wedge(Form::dz(2, 1, kFloat), Form::dzbar(2, 1, kFloat));  // not real
  try {
    nonnegative_sampled(phi, {10, 1, 1e-9});
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("imaginary-part norm"), std::string::npos);
  }
}

TEST(Sampling, ComplexNormalHasUnitVariance) {
  NormalStream s(5);
  double sum = 0.0;
  const int count = 20000;
  for (int k = 0; k < count; ++k) sum += std::norm(s.complex_normal());
  EXPECT_NEAR(sum / count, 1.0, 0.03);
}

}  // namespace
}  // namespace chernform
