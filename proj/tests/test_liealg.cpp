#include <gtest/gtest.h>

#include "ospmin/liealg.hpp"

using namespace ospmin;

TEST(LieAlg, TKKDimensions) {
  // dim osp(p,q|2n) with m = p+q: m(m-1)/2 + n(2n+1) even, 2mn odd
  for (auto t : {ModelParams(4, 4, 1), ModelParams(6, 4, 1), ModelParams(3, 5, 0), ModelParams(2, 2, 1)}) {
    TKK tkk(t);
    const int m = t.p + t.q;
    int odd = 0;
    for (int a = 0; a < tkk.dim(); ++a) odd += tkk.parity(a);
    EXPECT_EQ(tkk.dim() - odd, m * (m - 1) / 2 + t.n * (2 * t.n + 1)) << t.str();
    EXPECT_EQ(odd, 2 * m * t.n) << t.str();
  }
  EXPECT_EQ(TKK(ModelParams(4, 4, 1)).dim(), 47);
  EXPECT_EQ(TKK(ModelParams(6, 4, 1)).dim(), 68);
}

TEST(LieAlg, JordanIdentitySmall) {
  for (auto t : {ModelParams(3, 2, 0), ModelParams(2, 2, 1), ModelParams(2, 3, 2)}) {
    JordanSpin J(t);
    for (int i = 0; i < J.dim(); ++i)
      for (int j = 0; j < J.dim(); ++j)
        for (int k = 0; k < J.dim(); ++k) EXPECT_TRUE(J.jordan_identity(i, j, k)) << t.str() << i << j << k;
  }
}

TEST(LieAlg, BracketAntisymmetry) {
  TKK tkk(ModelParams(2, 2, 1));
  for (int a = 0; a < tkk.dim(); ++a)
    for (int b = 0; b < tkk.dim(); ++b) {
      TKKElement x = tkk.bracket(tkk.basis(a), tkk.basis(b));
      TKKElement y = tkk.bracket(tkk.basis(b), tkk.basis(a));
      const int s = (tkk.parity(a) && tkk.parity(b)) ? 1 : -1;
      std::vector<GaussQ> cx = tkk.coords(x), cy = tkk.coords(y);
      for (size_t i = 0; i < cx.size(); ++i) EXPECT_EQ(cx[i], GaussQ(s) * cy[i]) << tkk.name(a) << " " << tkk.name(b);
    }
}

TEST(LieAlg, IstrPreservesFormUpToLe) {
  // the inner derivations preserve the form; L_e does not
  TKK tkk(ModelParams(3, 3, 1));
  for (int a = tkk.dim_plus(); a < tkk.dim_plus() + tkk.dim_istr(); ++a) {
    auto lab = tkk.istr_label(a);
    if (lab.first > 0) EXPECT_TRUE(tkk.jordan().preserves_form(tkk.basis(a).istr)) << tkk.name(a);
    if (lab == std::pair{0, 0}) EXPECT_FALSE(tkk.jordan().preserves_form(tkk.basis(a).istr));
  }
}

TEST(LieAlg, HomomorphismSmall) {
  ModelParams t(2, 2, 1);
  TKK tkk(t);
  for (Rational lam : {Rational(2 - t.M()), Rational(3)}) {
    PiLambda pi(tkk, {lam});
    for (int a = 0; a < tkk.dim(); ++a)
      for (int b = a; b < tkk.dim(); ++b)
        EXPECT_EQ(pi(tkk.bracket(tkk.basis(a), tkk.basis(b))), supercommutator(pi.basis_image(a), pi.basis_image(b)))
            << tkk.name(a) << " " << tkk.name(b);
  }
}

TEST(LieAlg, IsomorphismSmall) {
  TKK tkk(ModelParams(3, 2, 0));
  OspIso iso(tkk);
  for (int a = 0; a < tkk.dim(); ++a)
    for (int b = 0; b < tkk.dim(); ++b)
      EXPECT_EQ(iso(tkk.bracket(tkk.basis(a), tkk.basis(b))), supercommutator(iso.basis_image(a), iso.basis_image(b)));
}

TEST(LieAlg, TangentialOnlyAtCriticalLambda) {
  ModelParams t(3, 3, 1);
  TKK tkk(t);
  SpacePtr sp = model_space(t);
  DiffOp R = r2_op(sp);
  for (int d = -1; d <= 1; ++d) {
    PiLambda pi(tkk, {Rational(2 - t.M() + d)}, sp);
    for (int k = 0; k < tkk.jordan().dim(); ++k) {
      DiffOp c = supercommutator(pi.bessel(k), R), res(sp);
      for (auto& [b, coef] : c.terms()) res.add_term(b, reduce_mod_r2(t, coef));
      EXPECT_EQ(res.is_zero(), d == 0) << d << " " << k;
    }
  }
}
