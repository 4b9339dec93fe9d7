#include "ospmin/superpoly.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace ospmin {

namespace {

// Inverse of a small integer matrix with entries in {-1,0,1} whose inverse is
// again integral (signature / symplectic forms). Gauss-Jordan over Q.
std::vector<std::vector<int>> invert_form(const std::vector<std::vector<int>>& b) {
  const int n = static_cast<int>(b.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = b[i][j];
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (sgn(a[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw DomainError("degenerate bilinear form");
    std::swap(a[piv], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& v = a[i][n + j];
      if (v.get_den() != 1) throw DomainError("form inverse is not integral");
      out[i][j] = static_cast<int>(v.get_num().get_si());
    }
  return out;
}

}  // namespace

VarSpace::VarSpace(std::vector<Variable> vars, std::vector<std::vector<int>> beta)
    : vars_(std::move(vars)), beta_(std::move(beta)) {
  const int n = size();
  if (n > kMaxVars) throw std::invalid_argument("too many variables");
  if (static_cast<int>(beta_.size()) != n) throw std::invalid_argument("form size mismatch");
  for (int i = 0; i < n; ++i) {
    if (vars_[i].odd) odd_mask_ |= (1u << i);
    for (int j = 0; j < n; ++j) {
      int bij = beta_[i][j];
      if (bij == 0) continue;
      if (vars_[i].odd != vars_[j].odd) throw std::invalid_argument("form is not even");
      int sym = vars_[i].odd ? -1 : 1;
      if (beta_[j][i] != sym * bij) throw std::invalid_argument("form is not supersymmetric");
    }
  }
  beta_inv_ = invert_form(beta_);
  beta_rows_.resize(n);
  beta_inv_rows_.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (beta_[i][j]) beta_rows_[i].emplace_back(j, beta_[i][j]);
      if (beta_inv_[i][j]) beta_inv_rows_[i].emplace_back(j, beta_inv_[i][j]);
    }
}

std::shared_ptr<const VarSpace> VarSpace::standard(const std::vector<std::string>& even_names,
                                                   const std::vector<int>& even_signs,
                                                   const std::vector<std::string>& odd_names) {
  const int m = static_cast<int>(even_names.size());
  const int o = static_cast<int>(odd_names.size());
  if (o % 2) throw std::invalid_argument("odd dimension must be even");
  std::vector<Variable> vars;
  for (auto& s : even_names) vars.push_back({s, false});
  for (auto& s : odd_names) vars.push_back({s, true});
  std::vector<std::vector<int>> b(m + o, std::vector<int>(m + o, 0));
  for (int i = 0; i < m; ++i) b[i][i] = even_signs.at(i);
  const int h = o / 2;
  for (int a = 0; a < h; ++a) {
    b[m + a][m + a + h] = 1;
    b[m + a + h][m + a] = -1;
  }
  return std::make_shared<const VarSpace>(std::move(vars), std::move(b));
}

int VarSpace::index_of(const std::string& nm) const {
  for (int i = 0; i < size(); ++i)
    if (vars_[i].name == nm) return i;
  throw std::invalid_argument("unknown variable " + nm);
}

int VarSpace::even_count() const {
  int c = 0;
  for (auto& v : vars_) c += v.odd ? 0 : 1;
  return c;
}
int VarSpace::odd_count() const { return size() - even_count(); }

int VarSpace::mono_parity(const Mono& m) const {
  int p = 0;
  uint32_t mask = odd_mask_;
  while (mask) {
    int i = std::countr_zero(mask);
    mask &= mask - 1;
    p += m.e[i];
  }
  return p & 1;
}

static inline uint32_t odd_bits(const Mono& m, uint32_t mask) {
  uint32_t bits = 0;
  while (mask) {
    int i = std::countr_zero(mask);
    mask &= mask - 1;
    if (m.e[i]) bits |= (1u << i);
  }
  return bits;
}

int VarSpace::product_sign(const Mono& a, const Mono& b) const {
  uint32_t A = odd_bits(a, odd_mask_), B = odd_bits(b, odd_mask_);
  if (A & B) return 0;
  int swaps = 0;
  while (B) {
    int j = std::countr_zero(B);
    B &= B - 1;
    swaps += std::popcount(A & ~((2u << j) - 1));
  }
  return (swaps & 1) ? -1 : 1;
}

std::string VarSpace::mono_str(const Mono& m) const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars_[i].name;
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

ModelParams::ModelParams(int p_, int q_, int n_) : p(p_), q(q_), n(n_) {
  if (p < 2 || q < 2 || n < 0) throw std::invalid_argument("need p >= 2, q >= 2, n >= 0");
  if (nvars() > kMaxVars) throw std::invalid_argument("too many variables for this build");
}

std::string ModelParams::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n) + ")";
}

std::vector<int> ModelParams::x_vars() const {
  std::vector<int> v;
  for (int i = 1; i <= p - 1; ++i) v.push_back(x(i));
  return v;
}
std::vector<int> ModelParams::y_vars() const {
  std::vector<int> v;
  for (int i = 1; i <= q - 1; ++i) v.push_back(y(i));
  return v;
}
std::vector<int> ModelParams::theta_vars() const {
  std::vector<int> v;
  for (int i = 1; i <= 2 * n; ++i) v.push_back(theta(i));
  return v;
}
std::vector<int> ModelParams::mu_block() const {
  if (!split()) return y_vars();
  auto v = x_vars();
  auto t = theta_vars();
  v.insert(v.end(), t.begin(), t.end());
  return v;
}
std::vector<int> ModelParams::nu_block() const {
  if (split()) return y_vars();
  auto v = x_vars();
  auto t = theta_vars();
  v.insert(v.end(), t.begin(), t.end());
  return v;
}

SpacePtr model_space(const ModelParams& mp) {
  std::vector<std::string> even, odd;
  std::vector<int> signs;
  for (int i = 1; i <= mp.p - 1; ++i) {
    even.push_back("x" + std::to_string(i));
    signs.push_back(1);
  }
  for (int i = 1; i <= mp.q - 1; ++i) {
    even.push_back("y" + std::to_string(i));
    signs.push_back(-1);
  }
  for (int i = 1; i <= 2 * mp.n; ++i) odd.push_back("th" + std::to_string(i));
  return VarSpace::standard(even, signs, odd);
}

void check_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a && b && a != b) throw std::invalid_argument("polynomials live in different spaces");
}

SuperPoly::SuperPoly(SpacePtr sp, const ExactScalar& c) : sp_(std::move(sp)) {
  if (!c.is_zero()) terms_.emplace(Mono{}, c);
}

SuperPoly SuperPoly::var(SpacePtr sp, int i) {
  Mono m;
  m.e[i] = 1;
  return monomial(std::move(sp), m);
}

SuperPoly SuperPoly::monomial(SpacePtr sp, const Mono& m, const ExactScalar& c) {
  SuperPoly r(std::move(sp));
  r.add_term(m, c);
  return r;
}

ExactScalar SuperPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactScalar() : it->second;
}

void SuperPoly::add_term(const Mono& m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int SuperPoly::parity() const {
  int par = -2;
  for (auto& [m, c] : terms_) {
    int pm = sp_->mono_parity(m);
    if (par == -2)
      par = pm;
    else if (par != pm)
      return -1;
  }
  return par == -2 ? 0 : par;
}

SuperPoly SuperPoly::even_part() const {
  SuperPoly r(sp_);
  for (auto& [m, c] : terms_)
    if (sp_->mono_parity(m) == 0) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

SuperPoly SuperPoly::odd_part() const {
  SuperPoly r(sp_);
  for (auto& [m, c] : terms_)
    if (sp_->mono_parity(m) == 1) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

SuperPoly SuperPoly::degree_part(int d) const {
  SuperPoly r(sp_);
  for (auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

int SuperPoly::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  if (!sp_) sp_ = o.sp_;
  check_same_space(sp_, o.sp_);
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  if (!sp_) sp_ = o.sp_;
  check_same_space(sp_, o.sp_);
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  check_same_space(a.sp_, b.sp_);
  SuperPoly r(a.sp_ ? a.sp_ : b.sp_);
  if (a.is_zero() || b.is_zero()) return r;
  const VarSpace& sp = *r.sp_;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      int s = sp.product_sign(ma, mb);
      if (!s) continue;
      Mono m;
      for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<uint8_t>(ma.e[i] + mb.e[i]);
      ExactScalar c = ca * cb;
      r.add_term(m, s > 0 ? c : -c);
    }
  return r;
}

SuperPoly SuperPoly::conj() const {
  SuperPoly r = *this;
  for (auto& [m, v] : r.terms_) v = v.conj();
  return r;
}

std::string SuperPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) s += " + ";
    first = false;
    s += "[" + it->second.str() + "]*" + sp_->mono_str(it->first);
  }
  return s;
}

SuperPoly partial(int i, const SuperPoly& f) {
  SuperPoly r(f.space());
  if (f.is_zero()) return r;
  const VarSpace& sp = *f.space();
  const bool odd = sp.odd(i);
  const uint32_t below = sp.odd_mask() & ((1u << i) - 1);
  for (auto& [m, c] : f.terms()) {
    if (!m.e[i]) continue;
    Mono d = m;
    d.e[i]--;
    if (!odd) {
      r.add_term(d, c * ExactScalar(static_cast<long>(m.e[i])));
    } else {
      int passes = std::popcount(odd_bits(m, below));
      r.add_term(d, (passes & 1) ? -c : c);
    }
  }
  return r;
}

SuperPoly partial_lower(int j, const SuperPoly& f) {
  SuperPoly r(f.space());
  for (auto [i, b] : f.space()->beta_row(j)) {
    SuperPoly d = partial(i, f);
    r += d * ExactScalar(static_cast<long>(b));
  }
  return r;
}

SuperPoly raised_var(const SpacePtr& sp, int j) {
  SuperPoly r(sp);
  for (int i = 0; i < sp->size(); ++i) {
    int b = sp->beta_inv(i, j);
    if (b) r += SuperPoly::var(sp, i) * ExactScalar(static_cast<long>(b));
  }
  return r;
}

SuperPoly r_squared_block(const SpacePtr& sp, const std::vector<int>& block) {
  SuperPoly r(sp);
  for (int i : block)
    for (auto [j, b] : sp->beta_inv_row(i)) {
      if (std::find(block.begin(), block.end(), j) == block.end()) continue;
      r += SuperPoly::var(sp, i) * SuperPoly::var(sp, j) * ExactScalar(static_cast<long>(b));
    }
  return r;
}

SuperPoly r_squared(const SpacePtr& sp) {
  std::vector<int> all(sp->size());
  for (int i = 0; i < sp->size(); ++i) all[i] = i;
  return r_squared_block(sp, all);
}

SuperPoly euler_block(const SuperPoly& f, const std::vector<int>& block) {
  SuperPoly r(f.space());
  for (auto& [m, c] : f.terms()) {
    long d = 0;
    for (int i : block) d += m.e[i];
    if (d) r.add_term(m, c * ExactScalar(d));
  }
  return r;
}

SuperPoly euler(const SuperPoly& f) {
  SuperPoly r(f.space());
  for (auto& [m, c] : f.terms()) {
    long d = m.degree();
    if (d) r.add_term(m, c * ExactScalar(d));
  }
  return r;
}

SuperPoly laplacian_block(const SuperPoly& f, const std::vector<int>& block) {
  // sum beta^{ij} d_i d_j with lowered derivatives, indices restricted to the block
  SuperPoly r(f.space());
  const VarSpace& sp = *f.space();
  auto in_block = [&](int v) { return std::find(block.begin(), block.end(), v) != block.end(); };
  for (int j : block) {
    SuperPoly dj(f.space());
    for (auto [a, b] : sp.beta_row(j))
      if (in_block(a)) dj += partial(a, f) * ExactScalar(static_cast<long>(b));
    if (dj.is_zero()) continue;
    for (auto [i, bi] : sp.beta_inv_row(j)) {
      if (!in_block(i)) continue;
      // beta^{ij}: row j of beta_inv lists beta^{j i}; the form is supersymmetric
      long s = sp.odd(i) ? -bi : bi;
      for (auto [a, b] : sp.beta_row(i))
        if (in_block(a)) r += partial(a, dj) * ExactScalar(s * b);
    }
  }
  return r;
}

SuperPoly laplacian(const SuperPoly& f) {
  std::vector<int> all(f.space()->size());
  for (int i = 0; i < f.space()->size(); ++i) all[i] = i;
  return laplacian_block(f, all);
}

SuperPoly reduce_mod_r2(const ModelParams& mp, const SuperPoly& f) {
  const SpacePtr& sp = f.space();
  const int v = mp.y(mp.q - 1);
  // y_{q-1}^2 == sum x_i^2 - sum_{j<q-1} y_j^2 + theta^2  (mod R^2)
  SuperPoly repl = r_squared(sp) + SuperPoly::var(sp, v) * SuperPoly::var(sp, v);
  std::map<int, SuperPoly> powers;
  powers.emplace(0, SuperPoly(sp, ExactScalar(1)));
  auto power = [&](int k) -> const SuperPoly& {
    auto it = powers.find(k);
    if (it != powers.end()) return it->second;
    int lo = powers.rbegin()->first;
    SuperPoly cur = powers.rbegin()->second;
    for (int e = lo + 1; e <= k; ++e) {
      cur = cur * repl;
      powers.emplace(e, cur);
    }
    return powers.at(k);
  };
  SuperPoly r(sp);
  SuperPoly work = f;
  // repl has no y_{q-1}, so one substitution pass reaches the normal form.
  for (auto& [m, c] : work.terms()) {
    int e = m.e[v];
    if (e < 2) {
      r.add_term(m, c);
      continue;
    }
    Mono rest = m;
    rest.e[v] = static_cast<uint8_t>(e % 2);
    // even variable y_{q-1}: placing it in front costs no sign
    r += SuperPoly::monomial(sp, rest, c) * power(e / 2);
  }
  return r;
}

std::vector<Mono> monomials_of_degree(const SpacePtr& sp, const std::vector<int>& vars, int d) {
  std::vector<Mono> out;
  Mono cur;
  std::function<void(size_t, int)> rec = [&](size_t k, int left) {
    if (k == vars.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    int v = vars[k];
    int top = sp->odd(v) ? std::min(left, 1) : left;
    for (int e = 0; e <= top; ++e) {
      cur.e[v] = static_cast<uint8_t>(e);
      rec(k + 1, left - e);
    }
    cur.e[v] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), MonoLess());
  return out;
}

}  // namespace ospmin
