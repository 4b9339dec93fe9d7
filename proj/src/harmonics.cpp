#include "ospmin/harmonics.hpp"

#include <algorithm>

namespace ospmin {

namespace {

SparseVec<Mono> to_sparse(const SuperPoly& f) {
  SparseVec<Mono> v;
  for (auto& [m, c] : f.terms()) v.emplace(m, c.to_gauss());
  return v;
}

bool in(const std::vector<int>& block, int v) { return std::find(block.begin(), block.end(), v) != block.end(); }

}  // namespace

HarmonicBasis harmonic_basis(const SpacePtr& sp, const std::vector<int>& block, int k) {
  HarmonicBasis hb;
  hb.k = k;
  hb.block = block;
  if (k < 0) return hb;
  std::vector<Mono> cols = monomials_of_degree(sp, block, k);
  std::map<Mono, int, MonoLess> rows;
  std::vector<SuperPoly> images;
  images.reserve(cols.size());
  for (auto& m : cols) {
    images.push_back(laplacian_block(SuperPoly::monomial(sp, m), block));
    for (auto& [mm, c] : images.back().terms()) rows.emplace(mm, 0);
  }
  int r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  const int nc = static_cast<int>(cols.size());
  GaussMatrix a(std::max(r, 1), std::vector<GaussQ>(nc));
  for (int j = 0; j < nc; ++j)
    for (auto& [m, c] : images[j].terms()) a[rows[m]][j] = c.to_gauss();
  for (auto& v : kernel(std::move(a), nc)) {
    SuperPoly f(sp);
    for (int j = 0; j < nc; ++j)
      if (!v[j].is_zero()) f.add_term(cols[j], ExactScalar(v[j]));
    hb.basis.push_back(std::move(f));
  }
  return hb;
}

long dim_poly(int m, int twon, int k) {
  if (k < 0) return 0;
  BigInt s = 0;
  for (int i = 0; i <= std::min(k, twon); ++i) s += binomial(twon, i) * binomial(k - i + m - 1, m - 1);
  return s.get_si();
}

long dim_formula(int m, int twon, int k) {
  if (m < 1) throw DomainError("dim_formula needs m >= 1");
  if (k < 0) return 0;
  BigInt s = 0;
  for (int i = 0; i <= std::min(k, twon); ++i) s += binomial(twon, i) * binomial(k - i + m - 1, m - 1);
  for (int i = 0; i <= std::min(k - 2, twon); ++i) s -= binomial(twon, i) * binomial(k - i + m - 3, m - 1);
  return s.get_si();
}

FischerReport fischer_check(const SpacePtr& sp, const std::vector<int>& block, int k) {
  FischerReport rep;
  int m = 0, twon = 0;
  for (int v : block) (sp->odd(v) ? twon : m)++;
  const int sdim = m - twon;
  rep.applicable = !(sdim <= 0 && sdim % 2 == 0);
  rep.dim_pk = dim_poly(m, twon, k);
  if (!rep.applicable) return rep;
  const SuperPoly r2 = r_squared_block(sp, block);
  std::vector<SparseVec<Mono>> span;
  SuperPoly r2j(sp, ExactScalar(1));
  for (int j = 0; 2 * j <= k; ++j) {
    HarmonicBasis hb = harmonic_basis(sp, block, k - 2 * j);
    rep.sum_harmonic += static_cast<long>(hb.basis.size());
    for (auto& h : hb.basis) span.push_back(to_sparse(r2j * h));
    r2j = r2j * r2;
  }
  rep.span_rank = sparse_rank(span);
  rep.ok = rep.sum_harmonic == rep.dim_pk && rep.span_rank == rep.dim_pk;
  return rep;
}

namespace {

struct BlockInfo {
  std::vector<int> vars;
  bool y = false;
  long denom = 0;
};

BlockInfo block_of(const ModelParams& mp, int var, int k) {
  BlockInfo b;
  std::vector<int> yv = mp.y_vars();
  if (in(yv, var)) {
    b.vars = yv;
    b.y = true;
    b.denom = mp.q - 3 + 2 * k;
  } else {
    b.vars = mp.x_vars();
    for (int t : mp.theta_vars()) b.vars.push_back(t);
    b.denom = mp.p - 3 - 2 * mp.n + 2 * k;
  }
  if (b.denom == 0) throw DomainError("raising/lowering denominator vanishes at k = " + std::to_string(k));
  return b;
}

}  // namespace

SuperPoly raise_harmonic(const ModelParams& mp, const SuperPoly& phi, int k, int var) {
  BlockInfo b = block_of(mp, var, k);
  const SpacePtr& sp = phi.space();
  SuperPoly zi = SuperPoly::var(sp, var);
  // s^2 + theta^2 on the x/theta block; t^2 = -(block form) on the y block
  SuperPoly r2 = r_squared_block(sp, b.vars);
  SuperPoly d = partial_lower(var, phi) * ExactScalar(rat(1, b.denom));
  if (b.y) return -(zi * phi) + r2 * d;
  return zi * phi - r2 * d;
}

SuperPoly lower_harmonic(const ModelParams& mp, const SuperPoly& phi, int k, int var) {
  BlockInfo b = block_of(mp, var, k);
  return partial_lower(var, phi) * ExactScalar(rat(1, b.denom));
}

std::vector<GaussQ> harmonic_coords(const HarmonicBasis& hb, const SuperPoly& f) {
  std::vector<SparseVec<Mono>> basis;
  for (auto& h : hb.basis) basis.push_back(to_sparse(h));
  auto c = solve_combination(basis, to_sparse(f));
  if (!c) throw std::runtime_error("polynomial is not in the span of the harmonic basis");
  return *c;
}

}  // namespace ospmin
