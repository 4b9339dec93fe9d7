#include <gtest/gtest.h>

#include <random>

#include "ospmin/linalg.hpp"

using namespace ospmin;

namespace {

GaussQ det_elimination(GaussMatrix a) {
  const size_t n = a.size();
  GaussQ d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    const GaussQ inv = a[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      const GaussQ f = a[r][c] * inv;
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

GaussMatrix random_matrix(std::mt19937& rng, int n, int m) {
  GaussMatrix a(n, std::vector<GaussQ>(m));
  for (auto& row : a)
    for (auto& x : row) x = GaussQ(rat(static_cast<int>(rng() % 7) - 3, 1 + rng() % 3), static_cast<int>(rng() % 3) - 1);
  return a;
}

}  // namespace

TEST(Linalg, BerkowitzMatchesElimination) {
  std::mt19937 rng(3);
  for (int n = 1; n <= 6; ++n)
    for (int it = 0; it < 5; ++it) {
      GaussMatrix a = random_matrix(rng, n, n);
      if (it == 0 && n > 1) a[n - 1] = a[0];  // singular
      std::vector<std::vector<ExactScalar>> e(n, std::vector<ExactScalar>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e[i][j] = ExactScalar(a[i][j]);
      EXPECT_EQ(det_berkowitz(e), ExactScalar(det_elimination(a))) << n << " " << it;
    }
}

TEST(Linalg, BerkowitzOverSqrtPi) {
  // diag(sqrt(pi), sqrt(pi)^-1, 2) with an off-diagonal entry that does not matter
  std::vector<std::vector<ExactScalar>> a = {{ExactScalar::sqrtpi(1), ExactScalar(5), ExactScalar(0)},
                                             {ExactScalar(0), ExactScalar::sqrtpi(-1), ExactScalar(0)},
                                             {ExactScalar(0), ExactScalar(0), ExactScalar(2)}};
  EXPECT_EQ(det_berkowitz(a), ExactScalar(2));
}

TEST(Linalg, KernelAndRank) {
  std::mt19937 rng(5);
  for (int it = 0; it < 10; ++it) {
    GaussMatrix a = random_matrix(rng, 4, 6);
    a[3] = a[1];
    auto ker = kernel(a, 6);
    EXPECT_EQ(rank(a) + static_cast<int>(ker.size()), 6);
    for (auto& v : ker)
      for (auto& row : a) {
        GaussQ s = 0;
        for (int j = 0; j < 6; ++j) s += row[j] * v[j];
        EXPECT_TRUE(s.is_zero());
      }
  }
}

TEST(Linalg, EchelonSolver) {
  EchelonSolver<int> es;
  EXPECT_TRUE(es.add({{0, 1}, {1, 2}}));
  EXPECT_TRUE(es.add({{1, 1}, {2, 1}}));
  EXPECT_FALSE(es.add({{0, 2}, {1, 5}, {2, 1}}));  // 2 v0 + v1
  auto x = es.solve({{0, 3}, {1, 7}, {2, 1}});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], GaussQ(3));
  EXPECT_EQ((*x)[1], GaussQ(1));
  EXPECT_FALSE(es.solve({{3, 1}}));
}
