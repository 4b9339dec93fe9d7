#include <gtest/gtest.h>

#include "ospmin/fourier.hpp"

using namespace ospmin;

namespace {

bool all_ok(const std::vector<FourierCheck>& rows) {
  for (auto& r : rows)
    if (!r.ok) return false;
  return true;
}

}  // namespace

TEST(Fourier, SymbolExchangeIsAnInvolutionUpToSign) {
  // x -> i d -> i (i x) = -x
  ModelParams t(3, 2, 1);
  SpacePtr sp = model_space(t);
  for (int v = 0; v < t.nvars(); ++v) {
    DiffOp x = DiffOp::mult(SuperPoly::var(sp, v));
    EXPECT_EQ(fourier_conjugate(fourier_conjugate(x)), -x);
    DiffOp d = DiffOp::d(sp, v);
    EXPECT_EQ(fourier_conjugate(fourier_conjugate(d)), -d);
  }
  EXPECT_EQ(fourier_conjugate(laplace_op(sp)), -r2_op(sp));
}

TEST(Fourier, TableAndAdjoint) {
  for (auto t : {ModelParams(2, 2, 1), ModelParams(3, 3, 1), ModelParams(4, 2, 0)}) {
    TKK tkk(t);
    for (Rational lam : {Rational(2 - t.M()), Rational(0), rat(1, 2)}) {
      EXPECT_TRUE(all_ok(verify_fourier_table(tkk, lam))) << t.str() << " " << lam;
      EXPECT_TRUE(all_ok(verify_adjoint(tkk, lam))) << t.str() << " " << lam;
    }
  }
}

TEST(Fourier, PiHatIsARepresentation) {
  ModelParams t(3, 3, 1);
  TKK tkk(t);
  PiHat ph(tkk, {Rational(1)}, model_space(t));
  for (int a = 0; a < tkk.dim(); ++a)
    for (int b = a; b < tkk.dim(); ++b)
      EXPECT_EQ(ph(tkk.bracket(tkk.basis(a), tkk.basis(b))), supercommutator(ph.basis_image(a), ph.basis_image(b)));
}

TEST(Fourier, KerDeltaOnlyAtCriticalLambda) {
  for (auto t : {ModelParams(4, 4, 1), ModelParams(3, 5, 0)}) {
    TKK tkk(t);
    for (int d = -1; d <= 1; ++d) {
      KerDeltaReport r = verify_ker_delta(tkk, Rational(2 - t.M() + d));
      EXPECT_TRUE(all_ok(r.rows));
      EXPECT_EQ(r.preserves, d == 0) << t.str() << " " << d;
    }
  }
}

TEST(Fourier, MuCritical) {
  EXPECT_EQ(mu_critical(ModelParams(4, 4, 1)), rat(-2, 20));
  EXPECT_EQ(mu_critical(ModelParams(3, 5, 0)), rat(-4, 28));
}
