#include <gtest/gtest.h>

#include "ospmin/superpoly.hpp"

using namespace ospmin;

namespace {
SpacePtr small_space() { return VarSpace::standard({"a", "b"}, {1, -1}, {"t1", "t2", "t3", "t4"}); }
}  // namespace

TEST(SuperPoly, GrassmannSigns) {
  auto sp = small_space();
  auto t1 = SuperPoly::var(sp, 2), t2 = SuperPoly::var(sp, 3), t3 = SuperPoly::var(sp, 4);
  EXPECT_EQ(t1 * t2, -(t2 * t1));
  EXPECT_TRUE((t1 * t1).is_zero());
  EXPECT_EQ((t1 * t2) * t3, t1 * (t2 * t3));
  EXPECT_EQ(t3 * t1 * t2, t1 * t2 * t3);
  EXPECT_EQ(t2 * t1 * t3, -(t1 * t2 * t3));
}

TEST(SuperPoly, DerivationSigns) {
  auto sp = small_space();
  auto a = SuperPoly::var(sp, 0), t1 = SuperPoly::var(sp, 2), t2 = SuperPoly::var(sp, 3);
  EXPECT_EQ(partial(3, t1 * t2), -t1);
  EXPECT_EQ(partial(2, t1 * t2), t2);
  // graded Leibniz rule
  SuperPoly f = a * a * t1 + t2 * ExactScalar(3), g = t1 * t2 * a + a;
  for (int i = 0; i < sp->size(); ++i) {
    SuperPoly lhs = partial(i, f * g);
    SuperPoly rhs = partial(i, f) * g;
    SuperPoly fo = f.odd_part(), fe = f.even_part();
    rhs += fe * partial(i, g);
    if (sp->odd(i))
      rhs -= fo * partial(i, g);
    else
      rhs += fo * partial(i, g);
    EXPECT_EQ(lhs, rhs) << sp->name(i);
  }
}

TEST(SuperPoly, LoweredDerivativeIsDual) {
  auto sp = small_space();
  for (int i = 0; i < sp->size(); ++i)
    for (int j = 0; j < sp->size(); ++j) {
      SuperPoly v = partial_lower(i, raised_var(sp, j));
      EXPECT_EQ(v, SuperPoly(sp, ExactScalar(i == j ? 1 : 0)));
    }
}

TEST(SuperPoly, RSquaredAndLaplacian) {
  auto sp = VarSpace::standard({"x"}, {1}, {"t1", "t2"});
  auto x = SuperPoly::var(sp, 0), t1 = SuperPoly::var(sp, 1), t2 = SuperPoly::var(sp, 2);
  EXPECT_EQ(r_squared(sp), x * x - t1 * t2 * ExactScalar(2));
  SuperPoly th2 = r_squared(sp) - x * x;
  EXPECT_EQ(laplacian(th2), SuperPoly(sp, ExactScalar(-4)));
  EXPECT_EQ(partial_lower(1, th2), t1 * ExactScalar(2));
  // Delta R^2 = 2M on constants
  EXPECT_EQ(laplacian(r_squared(sp)), SuperPoly(sp, ExactScalar(2 * sp->superdim())));
  EXPECT_EQ(euler(x * t1 * t2), x * t1 * t2 * ExactScalar(3));
}

TEST(SuperPoly, ReduceModR2) {
  ModelParams mp(4, 4, 1);
  auto sp = model_space(mp);
  int last = mp.y(3);
  SuperPoly r2 = r_squared(sp);
  EXPECT_TRUE(reduce_mod_r2(mp, r2).is_zero());
  SuperPoly f = SuperPoly::var(sp, last) * SuperPoly::var(sp, last) * SuperPoly::var(sp, last) +
                SuperPoly::var(sp, mp.x(1)) * SuperPoly::var(sp, mp.theta(1));
  SuperPoly g = reduce_mod_r2(mp, f);
  for (auto& [m, c] : g.terms()) EXPECT_LT(m.e[last], 2);
  // idempotent and R^2-linear
  EXPECT_EQ(reduce_mod_r2(mp, g), g);
  EXPECT_EQ(reduce_mod_r2(mp, f + r2 * f), g);
}

TEST(SuperPoly, MonomialEnumeration) {
  auto sp = small_space();
  std::vector<int> all = {0, 1, 2, 3, 4, 5};
  // dim P_k(R^{2|4}) = sum_j C(4,j) (k-j+1)
  for (int k = 0; k < 6; ++k) {
    size_t expect = 0;
    for (int j = 0; j <= std::min(k, 4); ++j) expect += binomial(4, j).get_ui() * (k - j + 1);
    EXPECT_EQ(monomials_of_degree(sp, all, k).size(), expect);
  }
}
