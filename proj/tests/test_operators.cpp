#include <gtest/gtest.h>

#include "ospmin/operators.hpp"

using namespace ospmin;

namespace {

void expect_sl2(const SpacePtr& sp) {
  DiffOp D = laplace_op(sp), R = r2_op(sp), E = euler_op(sp);
  const long M = sp->superdim();
  EXPECT_EQ(supercommutator(D, R), E * ExactScalar(4) + DiffOp::scalar(sp, ExactScalar(2 * M)));
  EXPECT_EQ(supercommutator(D, E), D * ExactScalar(2));
  EXPECT_EQ(supercommutator(R, E), R * ExactScalar(-2));
  for (auto& [ij, L] : osp_basis(sp)) {
    EXPECT_TRUE(supercommutator(L, D).is_zero());
    EXPECT_TRUE(supercommutator(L, R).is_zero());
    EXPECT_TRUE(supercommutator(L, E).is_zero());
  }
}

}  // namespace

TEST(Operators, Sl2TripleSmallSpaces) {
  expect_sl2(VarSpace::standard({"a", "b"}, {1, -1}, {"t1", "t2"}));
  expect_sl2(VarSpace::standard({"a"}, {1}, {"t1", "t2", "t3", "t4"}));
}

TEST(Operators, CompositionMatchesApplication) {
  auto sp = VarSpace::standard({"a", "b"}, {1, -1}, {"t1", "t2"});
  auto a = SuperPoly::var(sp, 0), t1 = SuperPoly::var(sp, 2), t2 = SuperPoly::var(sp, 3);
  DiffOp A = a * t1 * DiffOp::d(sp, 3) + t2 * DiffOp::d(sp, 0) * DiffOp::d(sp, 2) + laplace_op(sp);
  DiffOp B = t1 * t2 * DiffOp::d(sp, 1) + a * a * DiffOp::d(sp, 3) + DiffOp::d(sp, 2);
  SuperPoly f = a * a * a * t1 + a * SuperPoly::var(sp, 1) * t1 * t2 + t2 * ExactScalar(5);
  EXPECT_EQ((A * B).apply(f), A.apply(B.apply(f)));
  EXPECT_EQ((B * A).apply(f), B.apply(A.apply(f)));
}

TEST(Operators, AdjointOfEuler) {
  auto sp = VarSpace::standard({"a", "b"}, {1, -1}, {"t1", "t2"});
  DiffOp E = euler_op(sp);
  EXPECT_EQ(formal_adjoint(E), -E - DiffOp::scalar(sp, ExactScalar(sp->superdim())));
}

TEST(Operators, AdjointIsAntiInvolution) {
  auto sp = VarSpace::standard({"a"}, {1}, {"t1", "t2"});
  auto a = SuperPoly::var(sp, 0), t1 = SuperPoly::var(sp, 1);
  DiffOp A = (a * t1) * DiffOp::d(sp, 2) * ExactScalar::i() + a * DiffOp::d(sp, 0);
  DiffOp B = t1 * DiffOp::d(sp, 0) + DiffOp::d(sp, 1) * ExactScalar(GaussQ(rat(1), rat(2)));
  EXPECT_EQ(formal_adjoint(formal_adjoint(A)), A);
  // (AB)^t = (-1)^{|A||B|} B^t A^t on homogeneous pieces
  for (auto& a1 : {A.even_part(), A.odd_part()})
    for (auto& b1 : {B.even_part(), B.odd_part()}) {
      int s = (a1.parity() == 1 && b1.parity() == 1) ? -1 : 1;
      EXPECT_EQ(formal_adjoint(a1 * b1), formal_adjoint(b1) * formal_adjoint(a1) * ExactScalar(s));
    }
}
