#include <gtest/gtest.h>

#include <cmath>

#include "ospmin/liealg.hpp"
#include "ospmin/radial.hpp"

using namespace ospmin;

TEST(Radial, DerivativeOfK) {
  for (Rational b : {Rational(0), rat(1, 3), rat(1, 2), rat(-3, 2), Rational(2)}) {
    RadialElement k0 = RadialElement::K(b);
    EXPECT_EQ(d_radial(k0), RadialElement::K(b + 1, 1, ExactScalar(rat(-1, 2)))) << rat_str(b);
    RadialElement r2k0 = RadialElement::K(b, 2);
    EXPECT_EQ(d_radial(r2k0), RadialElement::K(b, 1, ExactScalar(2)) + RadialElement::K(b + 1, 3, ExactScalar(rat(-1, 2))));
  }
}

TEST(Radial, UpwardRecurrence) {
  Rational b(1, 3);
  RadialElement k2 = RadialElement::K(b + 2);
  RadialElement expect = RadialElement::K(b + 1, -2, ExactScalar(Rational(4 * (b + 1)))) + RadialElement::K(b, -2, ExactScalar(4));
  EXPECT_EQ(k2, expect);
  // canonical forms are fixed points and the recurrence holds in both directions
  for (Rational a : {rat(-5, 2), Rational(-1), rat(7, 3)}) {
    RadialElement lhs = RadialElement::K(a + 1, 2, ExactScalar(rat(1, 4))) - RadialElement::K(a, 0, ExactScalar(a)) -
                        RadialElement::K(a - 1);
    EXPECT_TRUE(lhs.is_zero()) << rat_str(a) << " " << lhs.str();
  }
}

TEST(Radial, HalfIntegerCollapse) {
  RadialElement k = RadialElement::K(rat(1, 2));
  EXPECT_EQ(k, RadialElement::K(rat(-1, 2), -1, ExactScalar(2)));
  EXPECT_EQ(d_radial(RadialElement::K(rat(-1, 2))), -RadialElement::K(rat(-1, 2)));
  EXPECT_NEAR(k.eval(1.3).real(), ktilde(0.5, 1.3), 1e-13);
}

TEST(Radial, BesselOde) {
  // z^2 u'' + (2a+1) z u' - z^2 u = 0 for u = K~_a
  for (Rational a : {Rational(0), rat(-1, 2), rat(3, 2), Rational(1)}) {
    RadialElement u = RadialElement::K(a);
    RadialElement d1 = d_radial(u), d2 = d_radial(d1);
    RadialElement ode = d2.times_r(2) + d1.times_r(1) * ExactScalar(Rational(2 * a + 1)) - u.times_r(2);
    EXPECT_TRUE(ode.is_zero()) << rat_str(a);
  }
}

TEST(Radial, NumericBesselOde) {
  const double h = 1e-4;
  for (double a : {-0.5, 0.0, 1.5}) {
    for (double z : {0.7, 1.9}) {
      for (auto f : {ktilde, itilde}) {
        double u = f(a, z), up = (f(a, z + h) - f(a, z - h)) / (2 * h),
               upp = (f(a, z + h) - 2 * u + f(a, z - h)) / (h * h);
        EXPECT_NEAR(z * z * upp + (2 * a + 1) * z * up - z * z * u, 0.0, 1e-5);
      }
    }
  }
}

TEST(Radial, LaguerreBasics) {
  auto l0 = laguerre(1, -1, 0);
  EXPECT_EQ(l0.value, RadialElement::K(rat(-1, 2), 0, ExactScalar(1) / gamma_half(rat(3, 2))));
  EXPECT_TRUE(laguerre(1, -1, -1).value.is_zero());
  auto l1 = laguerre(1, -1, 1).value;
  EXPECT_EQ(l1, euler_radial(l0.value) + l0.value);
}

TEST(Radial, LaguerreIdentities) {
  for (auto [mu, nu] : {std::pair{1, -1}, std::pair{1, 1}, std::pair{2, 0}, std::pair{3, 1}, std::pair{-1, -3}}) {
    for (int j = 0; j <= 4; ++j)
      for (auto& id : laguerre_identities(mu, nu, j)) EXPECT_TRUE(id.holds()) << id.name << " mu=" << mu << " nu=" << nu << " j=" << j;
  }
}

TEST(Radial, LaguerreMatchesGeneratingFunction) {
  for (auto [mu, nu] : {std::pair{1, -1}, std::pair{1, 1}, std::pair{2, 0}}) {
    for (int j = 0; j <= 3; ++j)
      for (double x : {0.5, 1.0, 2.0}) {
        double exact = laguerre(mu, nu, j).value.eval(x).real();
        double num = laguerre_numeric_oracle(mu, nu, j, x);
        // Lambda_{2,1}^{1,+-1} vanishes at x = 1; scale by Lambda_{2,0} there
        double scale = std::max(std::fabs(exact), std::fabs(laguerre(mu, nu, 0).value.eval(x).real()));
        EXPECT_LE(std::fabs(num - exact) / scale, 1e-8) << mu << " " << nu << " " << j << " " << x;
      }
  }
}

TEST(Radial, Gegenbauer) {
  for (Rational lam : {rat(1, 2), Rational(1), rat(3, 2), Rational(2)}) {
    EXPECT_EQ(gegenbauer(lam, 0), UniPoly{{gamma_half(lam)}});
    for (int m = 1; m <= 5; ++m) {
      EXPECT_EQ(gegenbauer(lam, m).derivative(), ExactScalar(2) * gegenbauer(lam + 1, m - 1));
      UniPoly omz2{{ExactScalar(4), ExactScalar(), ExactScalar(-4)}};
      UniPoly z{{ExactScalar(), ExactScalar(1)}};
      UniPoly lhs = omz2 * gegenbauer(lam + 1, m - 1) + ExactScalar(Rational(-2 * (2 * lam - 1))) * (z * gegenbauer(lam, m));
      UniPoly rhs = ExactScalar(Rational(-(m + 1) * (2 * lam + m - 1))) * gegenbauer(lam - 1, m + 1);
      EXPECT_EQ(lhs, rhs) << rat_str(lam) << " " << m;
    }
  }
  // lambda = 0 is regular: Gamma(l) C^l_n -> (2/n) T_n
  UniPoly t2 = gegenbauer(0, 2);
  EXPECT_EQ(t2, (UniPoly{{ExactScalar(-1), ExactScalar(), ExactScalar(2)}}));
}

namespace {

struct Orbit {
  ModelParams mp;
  SpacePtr sp;
  OrbitCalculus oc;
  explicit Orbit(ModelParams m) : mp(m), sp(model_space(m)), oc(m, sp) {}
};

}  // namespace

TEST(Radial, ChainRule) {
  for (auto m : {ModelParams(4, 4, 1), ModelParams(6, 4, 1), ModelParams(3, 2, 0)}) {
    Orbit o(m);
    RadialElement h = laguerre(o.mp.mu(), o.mp.nu(), 1).value;
    MixedElement H = o.oc.radial(h);
    RadialElement d1 = d_radial(h), d2 = d_radial(d1);
    // E h = r h'
    EXPECT_EQ(o.oc.apply(euler_op(o.sp), H), o.oc.radial(d1.times_r(1)));
    // d_{y^i} h = -(y_i / 2r) h'
    int yi = o.mp.y(1);
    EXPECT_EQ(o.oc.apply(DiffOp::d_lower(o.sp, yi), H),
              o.oc.reduce(MixedElement::product(SuperPoly::var(o.sp, yi), d1.times_r(-1) * ExactScalar(rat(-1, 2)))));
    int xi = o.mp.x(1);
    EXPECT_EQ(o.oc.apply(DiffOp::d_lower(o.sp, xi), H),
              o.oc.reduce(MixedElement::product(SuperPoly::var(o.sp, xi), d1.times_r(-1) * ExactScalar(rat(1, 2)))));
    // Delta h = (p-q-2n)/(2r) h' mod R^2
    EXPECT_EQ(o.oc.apply(laplace_op(o.sp), H),
              o.oc.radial(d1.times_r(-1) * ExactScalar(rat(o.mp.p - o.mp.q - 2 * o.mp.n, 2))));
    // (B(x_i) - x_i) h = x_i (h'' - (p-q-2n+lambda) h'/(2r) - h)
    Rational lam = 2 - o.mp.M();
    DiffOp B = bessel_operator(o.sp, xi, lam) - DiffOp::mult(SuperPoly::var(o.sp, xi));
    RadialElement rhs = d2 - d1.times_r(-1) * ExactScalar(Rational((o.mp.p - o.mp.q - 2 * o.mp.n + lam) / 2)) - h;
    EXPECT_EQ(o.oc.apply(B, H), o.oc.reduce(MixedElement::product(SuperPoly::var(o.sp, xi), rhs)));
  }
}
