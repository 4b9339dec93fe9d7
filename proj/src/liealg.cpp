#include "ospmin/liealg.hpp"

namespace ospmin {

JordanSpin::JordanSpin(const ModelParams& mp) : mp_(mp), dim_(mp.p + mp.q - 2 + 2 * mp.n) {
  parity_.assign(dim_, 0);
  beta_.assign(dim_, std::vector<int>(dim_, 0));
  beta_[0][0] = -1;
  const int ev = mp.p + mp.q - 3;
  for (int i = 1; i <= ev; ++i) beta_[i][i] = i <= mp.p - 1 ? 1 : -1;
  const int o = ev + 1;
  for (int a = 0; a < mp.n; ++a) {
    parity_[o + a] = parity_[o + a + mp.n] = 1;
    beta_[o + a][o + a + mp.n] = 1;
    beta_[o + a + mp.n][o + a] = -1;
  }
}

int JordanSpin::jvar(int k) const {
  if (k == 0) return mp_.y(mp_.q - 1);
  if (parity_[k]) return k;
  return k - 1;
}

JVec JordanSpin::unit_vec(int k) const {
  JVec v(dim_);
  v[k] = 1;
  return v;
}

JVec JordanSpin::mul(const JVec& a, const JVec& b) const {
  JVec r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      GaussQ c = a[i] * b[j];
      if (i == 0)
        r[j] += c;
      else if (j == 0)
        r[i] += c;
      else if (beta_[i][j])
        r[0] += c * GaussQ(beta_[i][j]);
    }
  }
  return r;
}

GaussMatrix JordanSpin::L(const JVec& a) const {
  GaussMatrix m(dim_, JVec(dim_));
  for (int k = 0; k < dim_; ++k) {
    JVec col = mul(a, unit_vec(k));
    for (int j = 0; j < dim_; ++j) m[j][k] = col[j];
  }
  return m;
}

JVec JordanSpin::apply(const GaussMatrix& a, const JVec& v) const {
  JVec r(dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k)
      if (!a[j][k].is_zero() && !v[k].is_zero()) r[j] += a[j][k] * v[k];
  return r;
}

static GaussMatrix matmul(const GaussMatrix& a, const GaussMatrix& b) {
  const size_t n = a.size();
  GaussMatrix r(n, JVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < n; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t k = 0; k < n; ++k)
        if (!b[l][k].is_zero()) r[i][k] += a[i][l] * b[l][k];
    }
  return r;
}

static void mat_axpy(GaussMatrix& r, const GaussQ& s, const GaussMatrix& a) {
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t k = 0; k < r.size(); ++k)
      if (!a[i][k].is_zero()) r[i][k] += s * a[i][k];
}

GaussMatrix JordanSpin::matrix_part(const GaussMatrix& a, int par) const {
  GaussMatrix r(dim_, JVec(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k)
      if (((parity_[i] + parity_[k]) & 1) == par) r[i][k] = a[i][k];
  return r;
}

int JordanSpin::matrix_parity(const GaussMatrix& a) const {
  int par = -2;
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      if (a[i][k].is_zero()) continue;
      int p = (parity_[i] + parity_[k]) & 1;
      if (par == -2)
        par = p;
      else if (par != p)
        return -1;
    }
  return par == -2 ? 0 : par;
}

GaussMatrix JordanSpin::matrix_bracket(const GaussMatrix& a, const GaussMatrix& b) const {
  GaussMatrix r(dim_, JVec(dim_));
  for (int pa = 0; pa < 2; ++pa)
    for (int pb = 0; pb < 2; ++pb) {
      GaussMatrix ap = matrix_part(a, pa), bp = matrix_part(b, pb);
      mat_axpy(r, GaussQ(1), matmul(ap, bp));
      mat_axpy(r, GaussQ((pa & pb) ? 1 : -1), matmul(bp, ap));
    }
  return r;
}

bool JordanSpin::preserves_form(const GaussMatrix& x) const {
  int px = matrix_parity(x);
  if (px < 0) return false;
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      GaussQ s;
      for (int j = 0; j < dim_; ++j) {
        if (beta_[j][b]) s += x[j][a] * GaussQ(beta_[j][b]);
        if (beta_[a][j]) s += x[j][b] * GaussQ(((px * parity_[a]) & 1) ? -beta_[a][j] : beta_[a][j]);
      }
      if (!s.is_zero()) return false;
    }
  return true;
}

bool JordanSpin::jordan_identity(int i, int j, int k) const {
  auto sgn2 = [&](int a, int b) { return GaussQ((parity_[a] & parity_[b]) ? -1 : 1); };
  JVec x = unit_vec(i), y = unit_vec(j), z = unit_vec(k);
  GaussMatrix r(dim_, JVec(dim_));
  mat_axpy(r, sgn2(i, k), matrix_bracket(L(x), L(mul(y, z))));
  mat_axpy(r, sgn2(j, i), matrix_bracket(L(y), L(mul(z, x))));
  mat_axpy(r, sgn2(k, j), matrix_bracket(L(z), L(mul(x, y))));
  for (auto& row : r)
    for (auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

TKK::TKK(const ModelParams& mp) : J_(mp) {
  const int d = J_.dim();
  for (int k = 0; k < d; ++k) {
    names_.push_back("Eplus(" + std::to_string(k) + ")");
    parity_.push_back(J_.parity(k));
  }
  // spanning set, pruned by exact rank
  std::vector<std::pair<std::pair<int, int>, GaussMatrix>> span;
  for (int i = 0; i < d; ++i) span.push_back({{0, i}, J_.L(i)});
  for (int i = 1; i < d; ++i)
    for (int j = i; j < d; ++j) {
      if (i == j && !J_.parity(i)) continue;
      span.push_back({{i, j}, J_.matrix_bracket(J_.L(i), J_.L(j))});
    }
  std::vector<JVec> echelon;
  std::vector<int> lead;
  auto flatten = [&](const GaussMatrix& m) {
    JVec v(d * d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) v[i * d + k] = m[i][k];
    return v;
  };
  for (auto& [lab, m] : span) {
    JVec v = flatten(m);
    for (size_t r = 0; r < echelon.size(); ++r) {
      if (v[lead[r]].is_zero()) continue;
      GaussQ f = v[lead[r]];
      for (int c = 0; c < d * d; ++c)
        if (!echelon[r][c].is_zero()) v[c] -= f * echelon[r][c];
    }
    int p = -1;
    for (int c = 0; c < d * d; ++c)
      if (!v[c].is_zero()) {
        p = c;
        break;
      }
    if (p < 0) continue;
    GaussQ inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    echelon.push_back(v);
    lead.push_back(p);
    istr_basis_.push_back(m);
    istr_labels_.push_back(lab);
    if (lab.first == 0 && lab.second == 0)
      names_.push_back("Le");
    else
      names_.push_back("Lij(" + std::to_string(lab.first) + "," + std::to_string(lab.second) + ")");
    parity_.push_back(J_.matrix_parity(m));
  }
  for (int k = 0; k < d; ++k) {
    names_.push_back("Eminus(" + std::to_string(k) + ")");
    parity_.push_back(J_.parity(k));
  }
  const int r = static_cast<int>(istr_basis_.size());
  for (int c : lead) pivots_.push_back({c / d, c % d});
  GaussMatrix S(r, JVec(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) S[a][b] = istr_basis_[b][pivots_[a].first][pivots_[a].second];
  // invert S
  GaussMatrix aug(r, JVec(2 * r));
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) aug[a][b] = S[a][b];
    aug[a][r + a] = 1;
  }
  rref(aug);
  pivot_inverse_.assign(r, JVec(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) pivot_inverse_[a][b] = aug[a][r + b];
}

int TKK::grade(int a) const {
  if (a < dim_plus()) return 0;
  if (a < dim_plus() + dim_istr()) return 1;
  return 2;
}

TKKElement TKK::zero() const {
  const int d = J_.dim();
  return {JVec(d), GaussMatrix(d, JVec(d)), JVec(d)};
}

TKKElement TKK::basis(int a) const {
  TKKElement x = zero();
  const int d = J_.dim();
  if (a < d) {
    x.plus[a] = a == 0 ? -1 : 1;  // \bar e_0 = -e_0
  } else if (a < d + dim_istr()) {
    x.istr = istr_basis_[a - d];
  } else {
    x.minus[a - d - dim_istr()] = 1;
  }
  return x;
}

std::vector<GaussQ> TKK::coords(const TKKElement& x) const {
  const int d = J_.dim(), r = dim_istr();
  std::vector<GaussQ> c(dim());
  for (int k = 0; k < d; ++k) c[k] = k == 0 ? -x.plus[0] : x.plus[k];
  for (int a = 0; a < r; ++a) {
    GaussQ s;
    for (int b = 0; b < r; ++b) {
      const GaussQ& v = x.istr[pivots_[b].first][pivots_[b].second];
      if (!v.is_zero() && !pivot_inverse_[a][b].is_zero()) s += pivot_inverse_[a][b] * v;
    }
    c[d + a] = s;
  }
  for (int k = 0; k < d; ++k) c[d + r + k] = x.minus[k];
  // membership check
  GaussMatrix back(d, JVec(d));
  for (int a = 0; a < r; ++a)
    if (!c[d + a].is_zero()) mat_axpy(back, c[d + a], istr_basis_[a]);
  if (back != x.istr) throw DomainError("matrix is not in istr(J)");
  return c;
}

TKKElement TKK::from_coords(const std::vector<GaussQ>& c) const {
  TKKElement x = zero();
  const int d = J_.dim(), r = dim_istr();
  for (int k = 0; k < d; ++k) x.plus[k] = k == 0 ? -c[0] : c[k];
  for (int a = 0; a < r; ++a)
    if (!c[d + a].is_zero()) mat_axpy(x.istr, c[d + a], istr_basis_[a]);
  for (int k = 0; k < d; ++k) x.minus[k] = c[d + r + k];
  return x;
}

bool TKK::equal(const TKKElement& a, const TKKElement& b) const {
  return a.plus == b.plus && a.minus == b.minus && a.istr == b.istr;
}

GaussMatrix TKK::rho_minus(const GaussMatrix& t) const {
  const int d = J_.dim();
  JVec te(d);
  for (int j = 0; j < d; ++j) te[j] = t[j][0];
  GaussMatrix r = t;
  mat_axpy(r, GaussQ(-2), J_.L(te));
  return r;
}

TKKElement TKK::bracket_homogeneous(const TKKElement& x, int gx, int px, const TKKElement& y, int gy,
                                    int py) const {
  TKKElement r = zero();
  if (gx == gy && gx != 1) return r;
  if ((gx == 0 && gy == 1) || (gx == 2 && gy != 2)) {
    // [x, y] = -(-1)^{|x||y|} [y, x]
    TKKElement s = bracket_homogeneous(y, gy, py, x, gx, px);
    GaussQ f((px & py) ? 1 : -1);
    for (auto& v : s.plus) v *= f;
    for (auto& v : s.minus) v *= f;
    for (auto& row : s.istr)
      for (auto& v : row) v *= f;
    return s;
  }
  if (gx == 1 && gy == 1) {
    r.istr = J_.matrix_bracket(x.istr, y.istr);
  } else if (gx == 1 && gy == 0) {
    r.plus = J_.apply(x.istr, y.plus);
  } else if (gx == 1 && gy == 2) {
    r.minus = J_.apply(rho_minus(x.istr), y.minus);
  } else if (gx == 0 && gy == 2) {
    GaussMatrix lxu = J_.L(J_.mul(x.plus, y.minus));
    GaussMatrix br = J_.matrix_bracket(J_.L(x.plus), J_.L(y.minus));
    r.istr = lxu;
    mat_axpy(r.istr, GaussQ(1), br);
    for (auto& row : r.istr)
      for (auto& v : row) v *= GaussQ(2);
  }
  return r;
}

TKKElement TKK::bracket(const TKKElement& x, const TKKElement& y) const {
  const int d = J_.dim();
  // homogeneous pieces: (grade, parity, element)
  auto pieces = [&](const TKKElement& z) {
    std::vector<std::tuple<int, int, TKKElement>> out;
    for (int k = 0; k < d; ++k) {
      if (!z.plus[k].is_zero()) {
        TKKElement e = zero();
        e.plus[k] = z.plus[k];
        out.emplace_back(0, J_.parity(k), e);
      }
      if (!z.minus[k].is_zero()) {
        TKKElement e = zero();
        e.minus[k] = z.minus[k];
        out.emplace_back(2, J_.parity(k), e);
      }
    }
    for (int par = 0; par < 2; ++par) {
      GaussMatrix m = J_.matrix_part(z.istr, par);
      bool nz = false;
      for (auto& row : m)
        for (auto& v : row) nz = nz || !v.is_zero();
      if (nz) {
        TKKElement e = zero();
        e.istr = m;
        out.emplace_back(1, par, e);
      }
    }
    return out;
  };
  TKKElement r = zero();
  for (auto& [gx, px, ex] : pieces(x))
    for (auto& [gy, py, ey] : pieces(y)) {
      TKKElement s = bracket_homogeneous(ex, gx, px, ey, gy, py);
      for (int k = 0; k < d; ++k) {
        r.plus[k] += s.plus[k];
        r.minus[k] += s.minus[k];
      }
      mat_axpy(r.istr, GaussQ(1), s.istr);
    }
  return r;
}

const std::map<int, GaussQ>& TKK::structure(int a, int b) const {
  auto key = std::make_pair(a, b);
  auto it = structure_cache_.find(key);
  if (it != structure_cache_.end()) return it->second;
  std::vector<GaussQ> c = coords(bracket(basis(a), basis(b)));
  std::map<int, GaussQ> sparse;
  for (int k = 0; k < dim(); ++k)
    if (!c[k].is_zero()) sparse.emplace(k, c[k]);
  return structure_cache_.emplace(key, std::move(sparse)).first->second;
}

// ---------------------------------------------------------------------------

DiffOp bessel_operator(const SpacePtr& sp, int var, const Rational& lambda) {
  DiffOp dk = DiffOp::d_lower(sp, var);
  DiffOp E = euler_op(sp);
  DiffOp first = (E * ExactScalar(2) - DiffOp::scalar(sp, ExactScalar(lambda))) * dk;
  DiffOp second = SuperPoly::var(sp, var) * laplace_op(sp);
  return first - second;
}

PiLambda::PiLambda(const TKK& tkk, const RepParams& rp) : PiLambda(tkk, rp, model_space(tkk.params())) {}

PiLambda::PiLambda(const TKK& tkk, const RepParams& rp, SpacePtr sp) : tkk_(tkk), rp_(rp), sp_(std::move(sp)) {
  E_ = euler_op(sp_);
  Delta_ = laplace_op(sp_);
}

DiffOp PiLambda::bessel(int k) const {
  const int v = tkk_.jordan().jvar(k);
  DiffOp dk = DiffOp::d_lower(sp_, v);
  DiffOp first = (E_ * ExactScalar(2) - DiffOp::scalar(sp_, ExactScalar(rp_.lambda))) * dk;
  return first - SuperPoly::var(sp_, v) * Delta_;
}

DiffOp PiLambda::operator()(const TKKElement& x) const {
  const JordanSpin& J = tkk_.jordan();
  const int d = J.dim();
  const ExactScalar mi = -ExactScalar::i();
  DiffOp r(sp_);
  for (int k = 0; k < d; ++k) {
    // coordinates in the \bar e basis: \bar e_0 = -e_0
    if (!x.plus[k].is_zero()) r += bessel(k) * (mi * ExactScalar(k == 0 ? -x.plus[k] : x.plus[k]));
    if (!x.minus[k].is_zero()) r += DiffOp::mult(SuperPoly::var(sp_, J.jvar(k))) * (mi * ExactScalar(x.minus[k]));
  }
  // istr: D_{rho^-(T)} + lambda/2 * (coefficient of L_e)
  GaussMatrix t = x.istr;
  JVec te(d);
  for (int j = 0; j < d; ++j) te[j] = t[j][0];
  GaussMatrix lt = J.L(te);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      GaussQ a = t[j][k] - GaussQ(2) * lt[j][k];
      if (a.is_zero()) continue;
      r += (SuperPoly::var(sp_, J.jvar(j)) * DiffOp::d(sp_, J.jvar(k))) * ExactScalar(a);
    }
  if (!te[0].is_zero()) r += DiffOp::scalar(sp_, ExactScalar(te[0]) * ExactScalar(rp_.lambda / 2));
  return r;
}

const DiffOp& PiLambda::basis_image(int a) const {
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(a, (*this)(tkk_.basis(a))).first->second;
}

SuperPoly pi_c(const PiLambda& pi, const TKKElement& x, const SuperPoly& f) {
  return reduce_mod_r2(pi.params(), pi(x).apply(f));
}

// ---------------------------------------------------------------------------

OspIso::OspIso(const TKK& tkk) : tkk_(tkk) {
  const ModelParams& mp = tkk.params();
  const JordanSpin& J = tkk.jordan();
  std::vector<std::string> even, odd;
  std::vector<int> signs;
  even.push_back("u0");
  signs.push_back(1);
  for (int i = 1; i <= mp.p + mp.q - 3; ++i) {
    even.push_back("u" + std::to_string(i));
    signs.push_back(J.beta(i, i));
  }
  even.push_back("u" + std::to_string(mp.p + mp.q - 2));
  signs.push_back(-1);
  even.push_back("u" + std::to_string(mp.p + mp.q - 1));
  signs.push_back(-1);
  for (int a = 0; a < 2 * mp.n; ++a) odd.push_back("w" + std::to_string(a + 1));
  sp_ = VarSpace::standard(even, signs, odd);

  const int d = J.dim();
  const int E0 = tilde(0), P = extra_minus();
  for (int a = 0; a < tkk.dim(); ++a) {
    DiffOp img(sp_);
    int g = tkk.grade(a);
    if (g == 0) {
      int k = a;
      // \bar e_0 = -e_0^+ with e_0^+ -> -L_{e0,P} + L_{e0,0}
      if (k == 0)
        img = L_op(sp_, E0, P) - L_op(sp_, E0, 0);
      else
        img = L_op(sp_, tilde(k), P) - L_op(sp_, tilde(k), 0);
    } else if (g == 2) {
      int k = a - d - tkk.dim_istr();
      img = L_op(sp_, tilde(k), P) + L_op(sp_, tilde(k), 0);
    } else {
      auto [i, j] = tkk.istr_label(a);
      if (i == 0 && j == 0)
        img = L_op(sp_, 0, P);
      else if (i == 0)
        img = L_op(sp_, tilde(j), E0);
      else
        img = L_op(sp_, tilde(i), tilde(j));
    }
    images_.push_back(img);
  }
}

int OspIso::tilde(int k) const {
  const ModelParams& mp = tkk_.params();
  if (k == 0) return mp.p + mp.q - 2;
  if (tkk_.jordan().parity(k)) return k + 2;
  return k;
}

int OspIso::extra_minus() const { return tkk_.params().p + tkk_.params().q - 1; }

DiffOp OspIso::basis_image(int a) const { return images_.at(a); }

DiffOp OspIso::operator()(const TKKElement& x) const {
  std::vector<GaussQ> c = tkk_.coords(x);
  DiffOp r(sp_);
  for (int a = 0; a < tkk_.dim(); ++a)
    if (!c[a].is_zero()) r += images_[a] * ExactScalar(c[a]);
  return r;
}

}  // namespace ospmin
