#include "ospmin/operators.hpp"

#include <algorithm>

namespace ospmin {

namespace {

Mono unit(int i) {
  Mono m;
  m.e[i] = 1;
  return m;
}

// Visit the derivative indices of b from the rightmost factor to the leftmost.
template <class F>
void for_each_factor_reversed(const Mono& b, int nvars, F&& f) {
  for (int v = nvars - 1; v >= 0; --v)
    for (int k = 0; k < b.e[v]; ++k) f(v);
}

}  // namespace

DiffOp DiffOp::scalar(SpacePtr sp, const ExactScalar& c) {
  DiffOp r(sp);
  r.add_term(Mono{}, SuperPoly(sp, c));
  return r;
}

DiffOp DiffOp::mult(const SuperPoly& f) {
  DiffOp r(f.space());
  r.add_term(Mono{}, f);
  return r;
}

DiffOp DiffOp::d(SpacePtr sp, int i) {
  DiffOp r(sp);
  r.add_term(unit(i), SuperPoly(sp, ExactScalar(1)));
  return r;
}

DiffOp DiffOp::d_lower(SpacePtr sp, int j) {
  DiffOp r(sp);
  for (auto [i, b] : sp->beta_row(j)) r.add_term(unit(i), SuperPoly(sp, ExactScalar(static_cast<long>(b))));
  return r;
}

DiffOp DiffOp::term(const SuperPoly& c, const Mono& derivs) {
  DiffOp r(c.space());
  r.add_term(derivs, c);
  return r;
}

int DiffOp::order() const {
  int o = -1;
  for (auto& [b, c] : terms_) o = std::max(o, b.degree());
  return o;
}

int DiffOp::parity() const {
  int par = -2;
  for (auto& [b, c] : terms_) {
    int pb = sp_->mono_parity(b);
    for (auto& [m, v] : c.terms()) {
      int pm = (sp_->mono_parity(m) + pb) & 1;
      if (par == -2)
        par = pm;
      else if (par != pm)
        return -1;
    }
  }
  return par == -2 ? 0 : par;
}

DiffOp DiffOp::even_part() const {
  DiffOp r(sp_);
  for (auto& [b, c] : terms_) r.add_term(b, sp_->mono_parity(b) ? c.odd_part() : c.even_part());
  return r;
}

DiffOp DiffOp::odd_part() const {
  DiffOp r(sp_);
  for (auto& [b, c] : terms_) r.add_term(b, sp_->mono_parity(b) ? c.even_part() : c.odd_part());
  return r;
}

void DiffOp::add_term(const Mono& derivs, const SuperPoly& c) {
  if (c.is_zero()) return;
  if (!sp_) sp_ = c.space();
  auto it = terms_.find(derivs);
  if (it == terms_.end()) {
    terms_.emplace(derivs, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (!sp_) sp_ = o.sp_;
  check_same_space(sp_, o.sp_);
  for (auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (!sp_) sp_ = o.sp_;
  check_same_space(sp_, o.sp_);
  for (auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [b, v] : r.terms_) v = -v;
  return r;
}

DiffOp operator*(const SuperPoly& f, const DiffOp& D) {
  DiffOp r(D.space() ? D.space() : f.space());
  for (auto& [b, c] : D.terms()) r.add_term(b, f * c);
  return r;
}

DiffOp d_compose(int i, const DiffOp& D) {
  const SpacePtr& sp = D.space();
  DiffOp r(sp);
  const bool odd = sp->odd(i);
  const Mono ui = unit(i);
  for (auto& [b, c] : D.terms()) {
    r.add_term(b, partial(i, c));
    int s = sp->product_sign(ui, b);
    if (!s) continue;
    Mono nb = b;
    nb.e[i]++;
    if (!odd) {
      r.add_term(nb, s > 0 ? c : -c);
    } else {
      SuperPoly ce = c.even_part(), co = c.odd_part();
      r.add_term(nb, s > 0 ? ce - co : co - ce);
    }
  }
  return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  check_same_space(a.space(), b.space());
  SpacePtr sp = a.space() ? a.space() : b.space();
  DiffOp r(sp);
  if (a.is_zero() || b.is_zero()) return r;
  const int nv = sp->size();
  for (auto& [alpha, ca] : a.terms()) {
    DiffOp t = b;
    for_each_factor_reversed(alpha, nv, [&](int v) { t = d_compose(v, t); });
    r += ca * t;
  }
  return r;
}

SuperPoly DiffOp::apply(const SuperPoly& f) const {
  SuperPoly r(sp_ ? sp_ : f.space());
  if (f.is_zero()) return r;
  check_same_space(sp_, f.space());
  const int nv = sp_->size();
  std::map<Mono, SuperPoly, MonoLess> cache;
  for (auto& [alpha, c] : terms_) {
    SuperPoly g = f;
    for_each_factor_reversed(alpha, nv, [&](int v) {
      if (!g.is_zero()) g = partial(v, g);
    });
    if (!g.is_zero()) r += c * g;
  }
  return r;
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [b, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.str() + ")";
    if (b.degree()) s += "*D[" + sp_->mono_str(b) + "]";
  }
  return s;
}

DiffOp supercommutator(const DiffOp& a, const DiffOp& b) {
  DiffOp r(a.space() ? a.space() : b.space());
  DiffOp ap[2] = {a.even_part(), a.odd_part()};
  DiffOp bp[2] = {b.even_part(), b.odd_part()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (ap[i].is_zero() || bp[j].is_zero()) continue;
      r += ap[i] * bp[j];
      if (i & j)
        r += bp[j] * ap[i];
      else
        r -= bp[j] * ap[i];
    }
  return r;
}

DiffOp formal_adjoint(const DiffOp& D) {
  const SpacePtr& sp = D.space();
  DiffOp r(sp);
  const int nv = sp->size();
  for (auto& [b, c] : D.terms()) {
    const int pb = sp->mono_parity(b);
    const int ord = b.degree();
    SuperPoly parts[2] = {c.even_part().conj(), c.odd_part().conj()};
    for (int pc = 0; pc < 2; ++pc) {
      if (parts[pc].is_zero()) continue;
      DiffOp t = DiffOp::mult(parts[pc]);
      for_each_factor_reversed(b, nv, [&](int v) { t = d_compose(v, t); });
      int sign = ((pc * pb + ord) & 1) ? -1 : 1;
      if (sign < 0) t = -t;
      r += t;
    }
  }
  return r;
}

DiffOp r2_op(const SpacePtr& sp, const std::vector<int>& block) { return DiffOp::mult(r_squared_block(sp, block)); }

DiffOp euler_op(const SpacePtr& sp, const std::vector<int>& block) {
  DiffOp r(sp);
  for (int i : block) r += SuperPoly::var(sp, i) * DiffOp::d(sp, i);
  return r;
}

DiffOp laplace_op(const SpacePtr& sp, const std::vector<int>& block) {
  DiffOp r(sp);
  auto in_block = [&](int v) { return std::find(block.begin(), block.end(), v) != block.end(); };
  for (int i : block)
    for (auto [j, bij] : sp->beta_inv_row(i)) {
      if (!in_block(j)) continue;
      DiffOp di(sp), dj(sp);
      for (auto [a, b] : sp->beta_row(i))
        if (in_block(a)) di += DiffOp::d(sp, a) * ExactScalar(static_cast<long>(b));
      for (auto [a, b] : sp->beta_row(j))
        if (in_block(a)) dj += DiffOp::d(sp, a) * ExactScalar(static_cast<long>(b));
      r += (di * dj) * ExactScalar(static_cast<long>(bij));
    }
  return r;
}

static std::vector<int> all_vars(const SpacePtr& sp) {
  std::vector<int> v(sp->size());
  for (int i = 0; i < sp->size(); ++i) v[i] = i;
  return v;
}

DiffOp r2_op(const SpacePtr& sp) { return r2_op(sp, all_vars(sp)); }
DiffOp euler_op(const SpacePtr& sp) { return euler_op(sp, all_vars(sp)); }
DiffOp laplace_op(const SpacePtr& sp) { return laplace_op(sp, all_vars(sp)); }

DiffOp L_op(const SpacePtr& sp, int i, int j) {
  if (i == j) {
    if (!sp->odd(i)) throw std::invalid_argument("L_ii only for odd i");
    return SuperPoly::var(sp, i) * DiffOp::d_lower(sp, i) * ExactScalar(2);
  }
  DiffOp r = SuperPoly::var(sp, i) * DiffOp::d_lower(sp, j);
  DiffOp t = SuperPoly::var(sp, j) * DiffOp::d_lower(sp, i);
  if (sp->odd(i) && sp->odd(j))
    r += t;
  else
    r -= t;
  return r;
}

std::vector<std::pair<std::pair<int, int>, DiffOp>> osp_basis(const SpacePtr& sp) {
  std::vector<std::pair<std::pair<int, int>, DiffOp>> out;
  for (int i = 0; i < sp->size(); ++i)
    for (int j = i; j < sp->size(); ++j) {
      if (i == j && !sp->odd(i)) continue;
      out.push_back({{i, j}, L_op(sp, i, j)});
    }
  return out;
}

}  // namespace ospmin
