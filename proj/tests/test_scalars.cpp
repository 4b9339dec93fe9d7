#include <gtest/gtest.h>

#include "ospmin/scalars.hpp"

using namespace ospmin;

TEST(Scalars, GaussianArithmetic) {
  GaussQ a(rat(1, 2), rat(3)), b(rat(-2), rat(1, 3));
  GaussQ p = a * b;
  EXPECT_EQ(p.re, rat(1, 2) * -2 - rat(3) * rat(1, 3));
  EXPECT_EQ(p.im, rat(1, 2) * rat(1, 3) + rat(3) * -2);
  EXPECT_EQ(a / a, GaussQ(1));
  EXPECT_THROW(GaussQ().inverse(), DomainError);
}

TEST(Scalars, SqrtPiPowers) {
  ExactScalar s = ExactScalar::sqrtpi();
  EXPECT_EQ(s * s, ExactScalar(GaussQ(1), 2));
  EXPECT_EQ((s * s) / s, s);
  ExactScalar inv = ExactScalar(1) / s;
  EXPECT_EQ(inv * s, ExactScalar(1));
  ExactScalar mixed = s + ExactScalar(1);
  EXPECT_THROW(ExactScalar(1) / mixed, DomainError);
  EXPECT_TRUE((mixed - s).is_rational());
}

TEST(Scalars, ConjugationIsRingMorphism) {
  ExactScalar a = ExactScalar(GaussQ(rat(1, 3), rat(2)), 1) + ExactScalar(GaussQ(rat(-1), rat(5, 7)));
  ExactScalar b = ExactScalar(GaussQ(rat(4), rat(-1)), -1) + ExactScalar::i();
  EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
}

TEST(Scalars, RoundTripText) {
  ExactScalar a = ExactScalar(GaussQ(rat(-7, 3), rat(2)), -1) + ExactScalar(GaussQ(rat(5, 8)), 3);
  EXPECT_EQ(ExactScalar::parse(a.str()), a);
  EXPECT_EQ(ExactScalar::parse("0"), ExactScalar());
  EXPECT_EQ(ExactScalar().str(), "0");
  EXPECT_THROW(ExactScalar::parse("(1,2)"), std::invalid_argument);
}

TEST(Scalars, GammaHalfIntegers) {
  EXPECT_EQ(gamma_half(rat(1, 2)), ExactScalar::sqrtpi());
  EXPECT_EQ(gamma_half(rat(5)), ExactScalar(24));
  EXPECT_EQ(gamma_half(rat(7, 2)), ExactScalar(GaussQ(rat(15, 8)), 1));
  // Gamma(a+1) = a Gamma(a)
  for (int k = 1; k < 15; ++k) {
    Rational a = rat(k, 2);
    EXPECT_EQ(gamma_half(a + 1), ExactScalar(a) * gamma_half(a));
  }
  EXPECT_THROW(gamma_half(rat(0)), DomainError);
  EXPECT_THROW(gamma_half(rat(1, 3)), DomainError);
  EXPECT_NEAR(gamma_half(rat(9, 2)).to_complex().real(), std::tgamma(4.5), 1e-12);
}

TEST(Scalars, Combinatorics) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(pochhammer(rat(-3, 2), 3), rat(-3, 2) * rat(-1, 2) * rat(1, 2));
  EXPECT_EQ(binomial_rational(rat(1, 2), 2), rat(-1, 8));
  for (int n = 0; n < 8; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(Rational(binomial(n, k)), binomial_rational(Rational(n), k));
}

TEST(Scalars, EvalAtIsHomomorphism) {
  ExactScalar a = ExactScalar(GaussQ(rat(2), rat(1)), 2) - ExactScalar(GaussQ(rat(1, 2)), -1);
  ExactScalar b = ExactScalar::sqrtpi(3) + ExactScalar(4);
  Rational v = rat(7, 5);
  EXPECT_EQ((a * b).eval_at(v), a.eval_at(v) * b.eval_at(v));
}
