#include "ospmin/radial.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace ospmin {

namespace {

Rational frac(const Rational& a) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return a - Rational(f);
}

long floor_of(const Rational& a) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return f.get_si();
}

}  // namespace

RadialElement::RadialElement(const Rational& order_class) : cls_(frac(order_class)) {}

RadialElement RadialElement::K(const Rational& order, int m, const ExactScalar& c) {
  RadialElement r(order);
  r.add(m, static_cast<int>(floor_of(order)), c);
  return r;
}

bool RadialElement::half() const { return cls_ == rat(1, 2); }

void RadialElement::add(int m, int shift, const ExactScalar& c) {
  if (c.is_zero()) return;
  std::map<Key, ExactScalar> raw;
  raw.emplace(Key{m, shift}, c);
  canonicalize(std::move(raw));
}

void RadialElement::canonicalize(std::map<Key, ExactScalar> raw) {
  // keyed by (shift, m) so the extreme orders are at the ends
  std::map<std::pair<int, int>, ExactScalar> w;
  for (auto& [k, c] : raw)
    if (!c.is_zero()) w[{k.second, k.first}] += c;
  const int lo = half() ? -1 : 0, hi = lo + 1;
  while (!w.empty() && w.rbegin()->first.first > hi) {
    auto it = std::prev(w.end());
    auto [s, m] = it->first;
    ExactScalar c = it->second;
    w.erase(it);
    if (c.is_zero()) continue;
    // K_a = (4/r^2) ((a-1) K_{a-1} + K_{a-2})
    Rational a = cls_ + s;
    w[{s - 1, m - 2}] += c * ExactScalar(Rational(4 * (a - 1)));
    w[{s - 2, m - 2}] += c * ExactScalar(4);
  }
  while (!w.empty() && w.begin()->first.first < lo) {
    auto it = w.begin();
    auto [s, m] = it->first;
    ExactScalar c = it->second;
    w.erase(it);
    if (c.is_zero()) continue;
    // K_a = (r^2/4) K_{a+2} - (a+1) K_{a+1}
    Rational a = cls_ + s;
    w[{s + 2, m + 2}] += c * ExactScalar(rat(1, 4));
    w[{s + 1, m}] -= c * ExactScalar(Rational(a + 1));
  }
  if (half()) {
    for (auto it = w.begin(); it != w.end();) {
      if (it->first.first != 0) {
        ++it;
        continue;
      }
      ExactScalar c = it->second * ExactScalar(2);
      int m = it->first.second;
      it = w.erase(it);
      w[{-1, m - 1}] += c;
    }
  }
  for (auto& [k, c] : w) {
    if (c.is_zero()) continue;
    Key key{k.second, k.first};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RadialElement& RadialElement::operator+=(const RadialElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) cls_ = o.cls_;
  if (cls_ != o.cls_) throw std::invalid_argument("radial elements of different order classes");
  for (auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

RadialElement& RadialElement::operator-=(const RadialElement& o) { return *this += -o; }

RadialElement& RadialElement::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

RadialElement RadialElement::operator-() const {
  RadialElement r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const RadialElement& a, const RadialElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.cls_ == b.cls_ && a.terms_ == b.terms_;
}

RadialElement RadialElement::times_r(int m) const {
  RadialElement r(cls_);
  for (auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + m, k.second}, c);
  return r;
}

int RadialElement::min_rpower() const {
  int m = 0;
  bool first = true;
  for (auto& [k, c] : terms_) {
    if (first || k.first < m) m = k.first;
    first = false;
  }
  return m;
}

std::complex<double> RadialElement::eval(double r) const {
  std::complex<double> s = 0;
  for (auto& [k, c] : terms_) s += c.to_complex() * std::pow(r, k.first) * ktilde(order(k.second).get_d(), r);
  return s;
}

std::string RadialElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.pretty() << ")";
    if (k.first) os << "*r^" << k.first;
    os << "*K[" << rat_str(order(k.second)) << "]";
  }
  return os.str();
}

double ktilde(double a, double x) { return std::pow(x / 2, -a) * boost::math::cyl_bessel_k(std::fabs(a), x); }

double itilde(double a, double x) {
  x = std::fabs(x);
  if (x == 0) return 1 / boost::math::tgamma(a + 1);
  return std::pow(x / 2, -a) * boost::math::cyl_bessel_i(a, x);
}

RadialElement d_radial(const RadialElement& f) {
  RadialElement r(f.order_class());
  for (auto& [k, c] : f.terms()) {
    auto [m, s] = k;
    if (m) r.add(m - 1, s, c * ExactScalar(m));
    r.add(m + 1, s + 1, c * ExactScalar(rat(-1, 2)));
  }
  return r;
}

RadialElement euler_radial(const RadialElement& f) { return d_radial(f).times_r(1); }

LaguerreFn laguerre(int mu, int nu, int j) {
  static std::shared_mutex mtx;
  static std::map<std::pair<int, int>, std::vector<RadialElement>> table;
  LaguerreFn out{mu, nu, j, RadialElement(rat(nu, 2))};
  if (j < 0) return out;
  const std::pair<int, int> key{mu, nu};
  {
    std::shared_lock lk(mtx);
    auto it = table.find(key);
    if (it != table.end() && static_cast<int>(it->second.size()) > j) {
      out.value = it->second[j];
      return out;
    }
  }
  std::unique_lock lk(mtx);
  auto& v = table[key];
  const Rational s = rat(mu + nu + 2, 2);
  if (v.empty()) v.push_back(RadialElement::K(rat(nu, 2), 0, ExactScalar(1) / gamma_half(rat(mu + 2, 2))));
  if (v.size() == 1 && j >= 1) v.push_back(euler_radial(v[0]) + v[0] * ExactScalar(s));
  while (static_cast<int>(v.size()) <= j) {
    const long jj = static_cast<long>(v.size()) - 1;
    const RadialElement& a = v[jj];
    RadialElement next = (euler_radial(a) + a * ExactScalar(s)) * ExactScalar(Rational(2 * jj + mu + 1));
    Rational b = (Rational(jj) + rat(mu + nu, 2)) * (Rational(jj) + rat(mu - nu, 2));
    next += v[jj - 1] * ExactScalar(b);
    next *= ExactScalar(rat(1, (jj + 1) * (jj + mu + 1)));
    v.push_back(std::move(next));
  }
  out.value = v[j];
  return out;
}

std::vector<RadialIdentity> laguerre_identities(int mu, int nu, int j) {
  std::vector<RadialIdentity> out;
  const RadialElement L = laguerre(mu, nu, j).value;
  const RadialElement d1 = d_radial(L), d2 = d_radial(d1);
  const Rational jm = Rational(j) + rat(mu - nu, 2), jp = Rational(j) + rat(mu + nu, 2);
  auto ex = [](const Rational& r) { return ExactScalar(r); };
  // (mu + nu + 2E) Lambda
  const RadialElement mn = L * ex(mu + nu) + euler_radial(L) * ex(2);
  out.push_back({"laguerre_ode_nu", d2 + d1.times_r(-1) * ex(nu + 1) - L,
                 laguerre(mu + 2, nu, j - 1).value * ex(j + mu + 1)});
  out.push_back({"laguerre_ode_mu", d2 + d1.times_r(-1) * ex(mu + 1) - L, laguerre(mu, nu + 2, j).value * ex(-jm)});
  try {
    out.push_back({"laguerre_contiguous_mu", mn * ex(mu) + laguerre(mu + 2, nu, j - 1).value.times_r(2) * ex(j + mu + 1),
                   laguerre(mu - 2, nu, j + 1).value * ex(4 * (j + 1))});
  } catch (const DomainError&) {
  }
  out.push_back({"laguerre_contiguous_nu", mn * ex(nu) + laguerre(mu, nu + 2, j).value.times_r(2) * ex(-jm),
                 laguerre(mu, nu - 2, j).value * ex(-4 * jp)});
  const RadialElement Le = (euler_radial(L) + L * ex(rat(mu + nu + 2, 2))) * ex(2 * j + mu + 1);
  RadialElement rec = laguerre(mu, nu, j + 1).value * ex((j + 1) * (j + mu + 1)) - laguerre(mu, nu, j - 1).value * ex(jp * jm);
  if (j == 0) {
    out.push_back({"laguerre_Le_start", euler_radial(L) + L * ex(rat(mu + nu + 2, 2)), laguerre(mu, nu, 1).value});
  } else {
    out.push_back({"laguerre_Le_recursion", Le, rec});
  }
  return out;
}

double laguerre_numeric_oracle(int mu, int nu, int j, double x, int nodes) {
  if (x <= 0) throw DomainError("oracle needs x > 0");
  if (j < 0) return 0;
  const double rho = 0.2;
  const double pi = std::acos(-1.0);
  auto G = [&](double t) {
    double u = 1 - t;
    return std::pow(u, -(mu + nu + 2) / 2.0) * itilde(mu / 2.0, t * x / u) * ktilde(nu / 2.0, x / u);
  };
  const int N = nodes;
  std::vector<double> f(N);
  for (int k = 0; k < N; ++k) {
    f[k] = G(rho * std::cos(pi * (k + 0.5) / N));
    if (!std::isfinite(f[k])) throw std::overflow_error("generating function not finite");
  }
  // Chebyshev coefficients, then the u^j coefficient of sum a_m T_m(u)
  std::vector<double> a(N);
  for (int m = 0; m < N; ++m) {
    double s = 0;
    for (int k = 0; k < N; ++k) s += f[k] * std::cos(pi * m * (k + 0.5) / N);
    a[m] = s * 2 / N;
  }
  a[0] /= 2;
  std::vector<double> tprev(N + 1, 0), tcur(N + 1, 0);
  tprev[0] = 1;   // T_0
  tcur[1] = 1;    // T_1
  double coef = a[0] * (j == 0 ? 1 : 0);
  if (N > 1) coef += a[1] * tcur[j];
  for (int m = 2; m < N; ++m) {
    std::vector<double> tn(N + 1, 0);
    for (int d = 0; d < N; ++d) tn[d + 1] += 2 * tcur[d];
    for (int d = 0; d <= N; ++d) tn[d] -= tprev[d];
    coef += a[m] * tn[j];
    tprev = std::move(tcur);
    tcur = std::move(tn);
  }
  double val = coef / std::pow(rho, j);
  if (!std::isfinite(val)) throw std::overflow_error("oracle value not finite");
  return val;
}

ExactScalar UniPoly::eval(const ExactScalar& z) const {
  ExactScalar s;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
  return s;
}

double UniPoly::eval(double z) const {
  double s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + it->to_complex().real();
  return s;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * ExactScalar(static_cast<long>(i)));
  return d;
}

int UniPoly::degree() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (!c[i].is_zero()) return i;
  return -1;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  const size_t n = std::max(a.c.size(), b.c.size());
  for (size_t i = 0; i < n; ++i) {
    ExactScalar x = i < a.c.size() ? a.c[i] : ExactScalar();
    ExactScalar y = i < b.c.size() ? b.c[i] : ExactScalar();
    if (x != y) return false;
  }
  return true;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

UniPoly operator*(const ExactScalar& s, const UniPoly& a) {
  UniPoly r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

UniPoly gegenbauer(const Rational& lambda, int n) {
  UniPoly out;
  if (n < 0) return out;
  out.c.assign(n + 1, ExactScalar());
  UniPoly w;  // 2(1-z)
  w.c = {ExactScalar(2), ExactScalar(-2)};
  UniPoly wk;
  wk.c = {ExactScalar(1)};
  for (int k = 0; k <= n; ++k) {
    // Gamma(lambda+k) (2lambda+2k)_{n-k}, with the pole of Gamma cancelled by a
    // vanishing factor when lambda+k is a nonpositive integer
    const Rational a = lambda + k;
    ExactScalar g;
    if (sgn(a) <= 0 && a.get_den() == 1) {
      const long p = -a.get_num().get_si();
      if (2 * p > n - k - 1) throw DomainError("normalized Gegenbauer polynomial has a pole");
      g = ExactScalar(rat(p % 2 ? -1 : 1, 1) / Rational(factorial(p)) * 2);
      for (int i = 0; i < n - k; ++i)
        if (i != 2 * p) g *= ExactScalar(Rational(2 * a + i));
    } else {
      g = gamma_half_any(a) * ExactScalar(pochhammer(2 * a, n - k));
    }
    g *= ExactScalar(rat(k % 2 ? -1 : 1, 1) / Rational(factorial(k) * factorial(n - k)));
    out = out + g * wk;
    wk = wk * w;
  }
  out.c.resize(n + 1);
  return out;
}

MixedElement MixedElement::product(const SuperPoly& f, const RadialElement& h) {
  MixedElement r(f.space(), h.order_class());
  for (auto& [m, c] : f.terms()) r.add(m, h * c);
  return r;
}

void MixedElement::add(const Mono& m, const RadialElement& h) {
  if (h.is_zero()) return;
  if (terms_.empty()) cls_ = h.order_class();
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, h);
    return;
  }
  it->second += h;
  if (it->second.is_zero()) terms_.erase(it);
}

MixedElement& MixedElement::operator+=(const MixedElement& o) {
  if (!sp_) sp_ = o.sp_;
  check_same_space(sp_, o.sp_);
  for (auto& [m, h] : o.terms_) add(m, h);
  return *this;
}

MixedElement& MixedElement::operator-=(const MixedElement& o) {
  if (!sp_) sp_ = o.sp_;
  check_same_space(sp_, o.sp_);
  for (auto& [m, h] : o.terms_) add(m, -h);
  return *this;
}

MixedElement& MixedElement::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, h] : terms_) h *= c;
  return *this;
}

MixedElement MixedElement::operator-() const {
  MixedElement r = *this;
  for (auto& [m, h] : r.terms_) h = -h;
  return r;
}

MixedElement operator*(const SuperPoly& f, const MixedElement& g) {
  check_same_space(f.space(), g.space());
  MixedElement r(g.space() ? g.space() : f.space(), g.order_class());
  const VarSpace& sp = *r.space();
  for (auto& [mf, cf] : f.terms())
    for (auto& [mg, h] : g.terms()) {
      int s = sp.product_sign(mf, mg);
      if (!s) continue;
      Mono m;
      for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<uint8_t>(mf.e[i] + mg.e[i]);
      r.add(m, h * (s > 0 ? cf : -cf));
    }
  return r;
}

bool operator==(const MixedElement& a, const MixedElement& b) { return a.terms_ == b.terms_; }

MixedElement MixedElement::times_r(int m) const {
  MixedElement r(sp_, cls_);
  for (auto& [mono, h] : terms_) r.terms_.emplace(mono, h.times_r(m));
  return r;
}

SparseVec<std::tuple<Mono, int, int, int>> MixedElement::coords() const {
  SparseVec<std::tuple<Mono, int, int, int>> v;
  for (auto& [mono, h] : terms_)
    for (auto& [k, c] : h.terms())
      for (auto& [pw, g] : c.terms()) v.emplace(std::tuple{mono, k.first, k.second, pw}, g);
  return v;
}

std::string MixedElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, h] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += sp_->mono_str(m) + "*[" + h.str() + "]";
  }
  return s;
}

OrbitCalculus::OrbitCalculus(const ModelParams& mp, SpacePtr sp) : mp_(mp), sp_(std::move(sp)) {
  SuperPoly Q = r_squared_block(sp_, mp_.theta_vars());
  for (int v : mp_.x_vars()) Q += SuperPoly::var(sp_, v) * SuperPoly::var(sp_, v);
  for (int v : mp_.y_vars()) Q += SuperPoly::var(sp_, v) * SuperPoly::var(sp_, v);
  for (int i = 0; i < sp_->size(); ++i) grad_.push_back(ospmin::partial(i, Q) * ExactScalar(rat(1, 4)));
  x1_repl_ = r_squared_block(sp_, mp_.theta_vars());
  for (int i = 2; i <= mp_.p - 1; ++i) x1_repl_ += SuperPoly::var(sp_, mp_.x(i)) * SuperPoly::var(sp_, mp_.x(i));
  y_repl_ = SuperPoly(sp_);
  for (int i = 1; i < mp_.q - 1; ++i) y_repl_ += SuperPoly::var(sp_, mp_.y(i)) * SuperPoly::var(sp_, mp_.y(i));
}

MixedElement OrbitCalculus::radial(const RadialElement& h) const {
  return MixedElement::product(SuperPoly(sp_, ExactScalar(1)), h);
}

MixedElement OrbitCalculus::partial(int i, const MixedElement& f) const {
  MixedElement r(sp_, f.order_class());
  for (auto& [a, h] : f.terms()) {
    SuperPoly xa = SuperPoly::monomial(sp_, a);
    const SuperPoly da = ospmin::partial(i, xa);
    for (auto& [m, c] : da.terms()) r.add(m, h * c);
    if (grad_[i].is_zero()) continue;
    RadialElement dh = d_radial(h).times_r(-1);
    if (sp_->odd(i) && sp_->mono_parity(a)) dh = -dh;
    const SuperPoly xg = xa * grad_[i];
    for (auto& [m, c] : xg.terms()) r.add(m, dh * c);
  }
  return r;
}

MixedElement OrbitCalculus::apply_ambient(const DiffOp& D, const MixedElement& f) const {
  std::map<Mono, MixedElement, MonoLess> memo;
  memo.emplace(Mono{}, f);
  std::function<const MixedElement&(const Mono&)> deriv = [&](const Mono& b) -> const MixedElement& {
    auto it = memo.find(b);
    if (it != memo.end()) return it->second;
    int v = 0;
    while (b.e[v] == 0) ++v;
    Mono rest = b;
    rest.e[v]--;
    MixedElement g = partial(v, deriv(rest));
    return memo.emplace(b, std::move(g)).first->second;
  };
  MixedElement r(sp_, f.order_class());
  for (auto& [b, c] : D.terms()) {
    const MixedElement& g = deriv(b);
    if (!g.is_zero()) r += c * g;
  }
  return r;
}

namespace {

// x^a with var^e, e >= 2, rewritten using var^2 = r^2 - repl; calls
// out(poly, rpow) for each resulting piece.
template <class F>
void expand_square(const SpacePtr& sp, const Mono& a, int var, const SuperPoly& repl, std::vector<SuperPoly>& negpow,
                   F&& out) {
  const int e = a.e[var];
  if (e < 2) {
    out(SuperPoly::monomial(sp, a), 0);
    return;
  }
  const int k = e / 2;
  Mono base = a;
  base.e[var] = static_cast<uint8_t>(e % 2);
  SuperPoly bp = SuperPoly::monomial(sp, base);
  if (negpow.empty()) negpow.push_back(SuperPoly(sp, ExactScalar(1)));
  while (static_cast<int>(negpow.size()) <= k) negpow.push_back(negpow.back() * (-repl));
  for (int j = 0; j <= k; ++j) out(negpow[k - j] * bp * ExactScalar(Rational(binomial(k, j))), 2 * j);
}

}  // namespace

MixedElement OrbitCalculus::reduce(const MixedElement& f) const {
  MixedElement r(sp_, f.order_class());
  std::vector<SuperPoly> ypow, xpow;
  const int yv = mp_.y(mp_.q - 1), xv = mp_.x(1);
  for (auto& [a, h] : f.terms()) {
    expand_square(sp_, a, yv, y_repl_, ypow, [&](const SuperPoly& p1, int r1) {
      for (auto& [b, c1] : p1.terms())
        expand_square(sp_, b, xv, x1_repl_, xpow, [&](const SuperPoly& p2, int r2) {
          RadialElement hr = h.times_r(r1 + r2) * c1;
          for (auto& [d, c2] : p2.terms()) r.add(d, hr * c2);
        });
    });
  }
  return r;
}

MixedElement apply_radial(const OrbitCalculus& oc, const DiffOp& D, const MixedElement& f) { return oc.apply(D, f); }

}  // namespace ospmin
