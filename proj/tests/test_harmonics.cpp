#include <gtest/gtest.h>

#include "ospmin/harmonics.hpp"

using namespace ospmin;

namespace {

std::vector<int> xtheta(const ModelParams& mp) {
  auto v = mp.x_vars();
  for (int t : mp.theta_vars()) v.push_back(t);
  return v;
}

}  // namespace

TEST(Harmonics, DimFormulaSpotValues) {
  EXPECT_EQ(dim_formula(6, 2, 2), 33);
  EXPECT_EQ(dim_formula(3, 2, 1), 5);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(dim_formula(3, 0, k), 2 * k + 1);
  EXPECT_EQ(dim_poly(6, 2, 2), 34);
}

TEST(Harmonics, KernelRankMatchesFormula) {
  auto sp = VarSpace::standard({"a1", "a2", "a3", "a4", "a5", "a6"}, {1, 1, 1, 1, 1, 1}, {"t1", "t2"});
  std::vector<int> all = {0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(harmonic_basis(sp, all, 2).basis.size(), 33u);
  ModelParams mp(4, 4, 1);
  auto ms = model_space(mp);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(static_cast<long>(harmonic_basis(ms, xtheta(mp), k).basis.size()), dim_formula(3, 2, k)) << k;
    EXPECT_EQ(static_cast<long>(harmonic_basis(ms, mp.y_vars(), k).basis.size()), dim_formula(3, 0, k)) << k;
  }
}

TEST(Harmonics, DegreeOneIsAllVariables) {
  ModelParams mp(4, 4, 1);
  auto ms = model_space(mp);
  EXPECT_EQ(harmonic_basis(ms, xtheta(mp), 1).basis.size(), 5u);
}

TEST(Harmonics, Fischer) {
  auto sp = VarSpace::standard({"a1", "a2", "a3"}, {1, 1, 1}, {});
  auto r = fischer_check(sp, {0, 1, 2}, 3);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.dim_pk, 10);
  ModelParams mp(6, 4, 1);
  auto ms = model_space(mp);
  for (int k = 0; k <= 4; ++k) EXPECT_TRUE(fischer_check(ms, xtheta(mp), k).ok) << k;
  // R^{1|2}: superdimension -1 is odd, decomposition holds
  auto s12 = VarSpace::standard({"a"}, {1}, {"t1", "t2"});
  EXPECT_TRUE(fischer_check(s12, {0, 1, 2}, 3).ok);
  // R^{2|4}: superdimension -2, hypothesis fails
  auto s24 = VarSpace::standard({"a", "b"}, {1, 1}, {"t1", "t2", "t3", "t4"});
  EXPECT_FALSE(fischer_check(s24, {0, 1, 2, 3, 4, 5}, 2).applicable);
}

TEST(Harmonics, RaiseLowerStayHarmonic) {
  for (auto mp : {ModelParams(4, 4, 1), ModelParams(6, 4, 1)}) {
    auto ms = model_space(mp);
    auto xt = xtheta(mp);
    auto yv = mp.y_vars();
    for (int k = 0; k <= 3; ++k) {
      for (auto [block, vars] : {std::pair{xt, xt}, std::pair{yv, yv}}) {
        auto hb = harmonic_basis(ms, block, k);
        for (size_t b = 0; b < hb.basis.size(); b += 2)
          for (int v : vars) {
            SuperPoly up = raise_harmonic(mp, hb.basis[b], k, v);
            SuperPoly dn = lower_harmonic(mp, hb.basis[b], k, v);
            EXPECT_TRUE(laplacian_block(up, block).is_zero());
            EXPECT_TRUE(laplacian_block(dn, block).is_zero());
            if (!up.is_zero()) EXPECT_EQ(up.max_degree(), k + 1);
          }
      }
    }
  }
}

TEST(Harmonics, RaiseOfConstant) {
  ModelParams mp(6, 4, 1);
  auto ms = model_space(mp);
  SuperPoly one(ms, ExactScalar(1));
  EXPECT_EQ(raise_harmonic(mp, one, 0, mp.x(1)), SuperPoly::var(ms, mp.x(1)));
  EXPECT_TRUE(lower_harmonic(mp, one, 0, mp.x(1)).is_zero());
}

TEST(Harmonics, VanishingDenominator) {
  // p - 3 - 2n + 2k = 0 at (5,2,1), k = 0
  ModelParams mp(5, 2, 1);
  auto ms = model_space(mp);
  SuperPoly one(ms, ExactScalar(1));
  EXPECT_THROW(raise_harmonic(mp, one, 0, mp.x(1)), DomainError);
}
