#include <gtest/gtest.h>

#include "ospmin/minrep.hpp"

using namespace ospmin;

namespace {

std::vector<int> all_vars(const ModelParams& mp) {
  std::vector<int> v(mp.nvars());
  for (int i = 0; i < mp.nvars(); ++i) v[i] = i;
  return v;
}

}  // namespace

TEST(MinRep, LevelDimensions) {
  TKK tkk(ModelParams(4, 4, 1));
  WModule w(tkk, 1);
  EXPECT_EQ(w.level(0).size(), 6u);
  EXPECT_EQ(w.level(1).size(), 72u);
  EXPECT_EQ(dim_wj_decomposition(w.params(), 2), 342);
  EXPECT_EQ(dim_wj_product(w.params(), 3), 1056);
  ModelParams b(6, 4, 1);
  for (int j = 0; j <= 4; ++j) EXPECT_EQ(dim_wj_decomposition(b, j), dim_wj_product(b, j)) << j;
  EXPECT_EQ(dim_wj_decomposition(b, 1), 32);
}

TEST(MinRep, RejectsNuInMinus2N) {
  TKK tkk(ModelParams(3, 5, 0));
  EXPECT_THROW(WModule(tkk, 0), DomainError);
}

TEST(MinRep, BesselAction) {
  for (auto t : {ModelParams(4, 4, 1), ModelParams(6, 4, 1)}) {
    TKK tkk(t);
    WModule w(tkk, 1);
    for (int i = 0; i < static_cast<int>(w.basis().size()); i += 7)
      for (int v : all_vars(t)) {
        IdentityReport r = verify_bessel_action(w, i, v);
        EXPECT_TRUE(r.ok) << t.str() << " " << r.name << " " << r.indices << "\n" << r.lhs << "\n" << r.rhs;
      }
  }
}

TEST(MinRep, LeAction) {
  for (auto t : {ModelParams(4, 4, 1), ModelParams(6, 4, 1)}) {
    TKK tkk(t);
    WModule w(tkk, 1);
    for (int i = 0; i < static_cast<int>(w.basis().size()); i += 5) {
      IdentityReport r = verify_le_action(w, i);
      EXPECT_TRUE(r.ok) << t.str() << " " << r.indices << "\n" << r.lhs << "\n" << r.rhs;
    }
  }
}

TEST(MinRep, PhiHarmonicAndIntertwining) {
  for (auto t : {ModelParams(4, 4, 1), ModelParams(6, 4, 1)}) {
    TKK tkk(t);
    WModule w(tkk, 1);
    PhiIso phi(w);
    for (int i = 0; i < static_cast<int>(w.basis().size()); i += 3) {
      SuperPoly f = phi.image(i);
      EXPECT_FALSE(f.is_zero());
      EXPECT_TRUE(phi.harmonic(f)) << w.basis()[i].label();
    }
    for (int i = 0; i < static_cast<int>(w.basis().size()); i += 11)
      for (int v : all_vars(t)) {
        IdentityReport r = phi.verify_intertwiner(i, v);
        EXPECT_TRUE(r.ok) << t.str() << " " << r.name << " " << r.indices << "\n" << r.lhs << "\n" << r.rhs;
      }
  }
}

TEST(MinRep, ActStaysInW) {
  TKK tkk(ModelParams(4, 4, 1));
  WModule w(tkk, 2);
  std::vector<GaussQ> v(w.basis().size());
  v[0] = 1;
  v[3] = GaussQ(2, -1);
  for (int a = 0; a < tkk.dim(); a += 3) EXPECT_NO_THROW(w.act(tkk.basis(a), v)) << tkk.name(a);
}

TEST(MinRep, GKDimension) {
  for (auto t : {ModelParams(4, 4, 1), ModelParams(3, 5, 0), ModelParams(6, 4, 1)}) {
    GKReport g = gk_dimension(t, 2 * t.n + 14);
    EXPECT_TRUE(g.stabilized) << t.str();
    EXPECT_EQ(g.degree, t.p + t.q - 3) << t.str();
  }
}
