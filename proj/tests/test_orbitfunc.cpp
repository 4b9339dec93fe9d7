#include <gtest/gtest.h>

#include <random>

#include "ospmin/orbitfunc.hpp"

using namespace ospmin;

TEST(OrbitFunc, SphereMoments) {
  // |S^2| = 4 pi, |S^0| = 2
  EXPECT_EQ(sphere_moment(3, {0, 0, 0}), ExactScalar::sqrtpi(2) * ExactScalar(4));
  EXPECT_EQ(sphere_moment(1, {0}), ExactScalar(2));
  EXPECT_TRUE(sphere_moment(3, {1, 2, 0}).is_zero());
  EXPECT_EQ(sphere_moment(4, {2, 0, 0, 0}), sphere_moment(4, {0, 0, 0, 0}) / ExactScalar(4));
}

TEST(OrbitFunc, RadialMoment) {
  EXPECT_EQ(radial_moment(2, 0, 0), ExactScalar(rat(1, 2)));
  EXPECT_THROW(radial_moment(2, 1, 0), DivergenceError);
  std::mt19937 rng(7);
  for (int it = 0; it < 20; ++it) {
    Rational a = rat(static_cast<int>(rng() % 9) - 4, 2), b = rat(static_cast<int>(rng() % 9) - 4, 2);
    Rational thr = 2 * (sgn(a) > 0 ? a : Rational(0)) + 2 * (sgn(b) > 0 ? b : Rational(0));
    Rational s = floor(thr.get_d()) + 1 + static_cast<int>(rng() % 4);
    double exact = radial_moment(s, a, b).to_complex().real();
    double num = radial_moment_quadrature(s.get_d(), a.get_d(), b.get_d());
    EXPECT_NEAR(num / exact, 1.0, 1e-9) << rat_str(s) << " " << rat_str(a) << " " << rat_str(b);
  }
}

TEST(OrbitFunc, PhiSharpGenerators) {
  ModelParams mp(4, 4, 1);
  SpacePtr sp = model_space(mp);
  const SuperPoly th2 = r_squared_block(sp, mp.theta_vars());
  // y_k -> (1 + xi) y_k, (1+xi) = 1 + theta^2/(4 t^2) + ...
  BipolarElement y = BipolarElement::polynomial(mp, SuperPoly::var(sp, mp.y(2)));
  BipolarElement expect = y + BipolarElement::polynomial(mp, th2 * SuperPoly::var(sp, mp.y(2))).times_st(0, -2) *
                                  ExactScalar(rat(1, 4));
  EXPECT_EQ(phi_sharp(y), expect);
  // |X| factors are fixed
  MixedElement k = MixedElement::product(SuperPoly(sp, ExactScalar(1)), RadialElement::K(rat(-1, 2)));
  EXPECT_EQ(phi_sharp(BipolarElement::single(mp, k)), BipolarElement::single(mp, k));
  // multiplicative
  BipolarElement f = BipolarElement::polynomial(mp, SuperPoly::var(sp, mp.x(1)) * SuperPoly::var(sp, mp.theta(1)));
  BipolarElement g = BipolarElement::single(mp, MixedElement::product(SuperPoly::var(sp, mp.x(2)) * SuperPoly::var(sp, mp.theta(2)) +
                                                                          SuperPoly::var(sp, mp.y(1)),
                                                                      RadialElement::K(rat(-1, 2), 1)));
  EXPECT_EQ(phi_sharp(f * g), phi_sharp(f) * phi_sharp(g));
}

TEST(OrbitFunc, BerezinNormalization) {
  ModelParams mp(4, 4, 1);
  SpacePtr sp = model_space(mp);
  OrbitIntegral I(mp, sp);
  // int_C theta1 theta2 K K against int_C K K with the same radial data: the
  // Berezin integral of theta1 theta2 is 1 and of theta2 theta1 is -1.
  MixedElement k = MixedElement::product(SuperPoly(sp, ExactScalar(1)), RadialElement::K(rat(-1, 2)));
  SuperPoly t12 = SuperPoly::var(sp, mp.theta(1)) * SuperPoly::var(sp, mp.theta(2));
  SuperPoly t21 = SuperPoly::var(sp, mp.theta(2)) * SuperPoly::var(sp, mp.theta(1));
  ExactScalar a = I.pairing(t12 * k, k), b = I.pairing(t21 * k, k);
  EXPECT_FALSE(a.is_zero());
  EXPECT_EQ(a, -b);
}

TEST(OrbitFunc, SigmaSum) {
  for (auto t : {ModelParams(4, 4, 1), ModelParams(6, 4, 1), ModelParams(5, 3, 2), ModelParams(7, 5, 3), ModelParams(3, 5, 0)})
    EXPECT_EQ(sigma_quadruple(t), sigma_closed(t)) << t.str();
}

// The exact functional equals the closed form times int_B (theta^2)^n, which is
// 1 only for n = 0 (-2 for n = 1, -8 for n = 2).
TEST(OrbitFunc, IntegralOfKnu) {
  for (auto t : {ModelParams(4, 4, 1), ModelParams(6, 4, 1), ModelParams(4, 2, 0), ModelParams(6, 2, 1),
                 ModelParams(8, 4, 2)}) {
    SpacePtr sp = model_space(t);
    OrbitIntegral I(t, sp);
    SuperPoly th2 = r_squared_block(sp, t.theta_vars()), top(sp, ExactScalar(1));
    for (int i = 0; i < t.n; ++i) top = top * th2;
    for (int i = 1; i <= 2 * t.n; ++i) top = partial(t.theta(i), top);
    ExactScalar b = top.coeff(Mono());
    MixedElement k = MixedElement::product(SuperPoly(sp, ExactScalar(1)), RadialElement::K(rat(t.nu(), 2)));
    EXPECT_EQ(I.pairing(k, k), integral_knu_closed(t) * b) << t.str();
    if (t.n == 0) EXPECT_EQ(I.pairing(k, k), integral_knu_closed(t));
  }
}

TEST(OrbitFunc, Properties) {
  for (auto t : {ModelParams(4, 4, 1), ModelParams(6, 4, 1)}) {
    TKK tkk(t);
    WModule w(tkk, 1);
    OrbitIntegral I(t, w.calculus().space());
    std::vector<std::pair<int, int>> samples = {{0, 0}, {1, 7}, {3, 20}, {10, 11}};
    for (auto& c : verify_integral_properties(w, I, samples))
      EXPECT_TRUE(c.ok) << t.str() << " " << c.name << " " << c.indices << "\n" << c.lhs << "\n" << c.rhs;
  }
}

TEST(OrbitFunc, GramW0) {
  TKK tkk(ModelParams(4, 4, 1));
  WModule w(tkk, 0);
  OrbitIntegral I(w.params(), w.calculus().space());
  GramReport g = gram_nondegeneracy(w, I, 0);
  EXPECT_EQ(g.size, 6);
  EXPECT_TRUE(g.superhermitian);
  EXPECT_TRUE(g.ok) << g.det.str();
}
