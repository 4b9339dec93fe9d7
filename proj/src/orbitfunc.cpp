#include "ospmin/orbitfunc.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <functional>
#include <sstream>

namespace ospmin {

namespace {

using Key = BipolarElement::Key;

ExactScalar q(const Rational& r) { return ExactScalar(r); }

Rational pow2(long e) {
  Rational r = 1;
  for (long i = 0; i < std::abs(e); ++i) r *= 2;
  return e < 0 ? 1 / r : r;
}

bool half_integral(const Rational& a) { return Rational(2 * a).get_den() == 1; }

Rational max0(const Rational& a) { return sgn(a) > 0 ? a : Rational(0); }

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<uint8_t>(a.e[i] + b.e[i]);
  return m;
}

void normalize(Key& k) {
  if (k.nk < 2) k.beta = 0;
  if (k.nk < 1) k.alpha = 0;
  if (k.nk == 2 && k.beta < k.alpha) std::swap(k.alpha, k.beta);
}

// D = (1/(2r)) d/dr on r^m K~_alpha K~_beta, using K~_a' = -(r/2) K~_{a+1}.
std::vector<std::pair<Key, ExactScalar>> radial_D(const Key& k) {
  std::vector<std::pair<Key, ExactScalar>> out;
  if (k.r != 0) {
    Key a = k;
    a.r -= 2;
    out.emplace_back(a, q(rat(k.r, 2)));
  }
  if (k.nk >= 1) {
    Key a = k;
    a.alpha += 1;
    normalize(a);
    out.emplace_back(a, q(rat(-1, 4)));
  }
  if (k.nk == 2) {
    Key b = k;
    b.beta += 1;
    normalize(b);
    out.emplace_back(b, q(rat(-1, 4)));
  }
  return out;
}

int degree_in(const Mono& m, const std::vector<int>& vars) {
  int d = 0;
  for (int v : vars) d += m.e[v];
  return d;
}

}  // namespace

ExactScalar sphere_moment(int d, const std::vector<int>& a) {
  if (d < 1) throw std::invalid_argument("sphere_moment: d >= 1");
  Rational tot = 0;
  ExactScalar num(2);
  for (int i = 0; i < d; ++i) {
    const int ai = i < static_cast<int>(a.size()) ? a[i] : 0;
    if (ai % 2) return ExactScalar();
    num *= gamma_half(rat(ai + 1, 2));
    tot += rat(ai + 1, 2);
  }
  return num / gamma_half(tot);
}

ExactScalar radial_moment(const Rational& sigma, const Rational& alpha, const Rational& beta) {
  if (sigma.get_den() != 1 || !half_integral(alpha) || !half_integral(beta))
    throw DomainError("radial_moment: needs integer sigma and half-integral orders");
  if (sigma <= 2 * max0(alpha) + 2 * max0(beta))
    throw DivergenceError("radial moment diverges at sigma=" + rat_str(sigma) + " alpha=" + rat_str(alpha) +
                          " beta=" + rat_str(beta));
  ExactScalar r = q(pow2(sigma.get_num().get_si() - 3));
  r *= gamma_half(sigma / 2);
  r *= gamma_half((sigma - 2 * alpha) / 2);
  r *= gamma_half((sigma - 2 * beta) / 2);
  r *= gamma_half((sigma - 2 * alpha - 2 * beta) / 2);
  return r / gamma_half(sigma - alpha - beta);
}

double radial_moment_quadrature(double sigma, double alpha, double beta) {
  auto f = [&](double x) {
    // outside [1e-30, 700] the integrand is negligible and K over/underflows
    if (x < 1e-30 || x > 700) return 0.0;
    return std::pow(x, sigma - 1) * ktilde(alpha, x) * ktilde(beta, x);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  return ts.integrate(f, 0.0, 1.0, 1e-14) + es.integrate(f, 1.0, std::numeric_limits<double>::infinity(), 1e-14);
}

// ---- BipolarElement

void BipolarElement::add(Key k, const ExactScalar& c) {
  if (c.is_zero()) return;
  normalize(k);
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BipolarElement BipolarElement::polynomial(const ModelParams& mp, const SuperPoly& f) {
  BipolarElement r(mp, f.space());
  for (auto& [m, c] : f.terms()) {
    Key k;
    k.mono = m;
    r.add(k, c);
  }
  return r;
}

BipolarElement BipolarElement::single(const ModelParams& mp, const MixedElement& f) {
  BipolarElement r(mp, f.space());
  for (auto& [m, h] : f.terms())
    for (auto& [rk, c] : h.terms()) {
      Key k;
      k.mono = m;
      k.r = rk.first;
      k.nk = 1;
      k.alpha = h.order(rk.second);
      r.add(k, c);
    }
  return r;
}

BipolarElement BipolarElement::pair(const ModelParams& mp, const MixedElement& f, const MixedElement& g) {
  return single(mp, f) * single(mp, g);
}

BipolarElement& BipolarElement::operator+=(const BipolarElement& o) {
  if (!sp_) {
    sp_ = o.sp_;
    mp_ = o.mp_;
  }
  for (auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

BipolarElement& BipolarElement::operator-=(const BipolarElement& o) {
  if (!sp_) {
    sp_ = o.sp_;
    mp_ = o.mp_;
  }
  for (auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

BipolarElement& BipolarElement::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BipolarElement operator*(const BipolarElement& a, const BipolarElement& b) {
  BipolarElement r(a.sp_ ? a.mp_ : b.mp_, a.sp_ ? a.sp_ : b.sp_);
  const VarSpace& sp = *r.sp_;
  for (auto& [ka, ca] : a.terms_)
    for (auto& [kb, cb] : b.terms_) {
      const int s = sp.product_sign(ka.mono, kb.mono);
      if (!s) continue;
      Key k;
      k.mono = mono_mul(ka.mono, kb.mono);
      k.s = ka.s + kb.s;
      k.t = ka.t + kb.t;
      k.r = ka.r + kb.r;
      k.nk = ka.nk + kb.nk;
      if (k.nk > 2) throw DomainError("product with more than two Bessel factors");
      if (ka.nk == 2) {
        k.alpha = ka.alpha, k.beta = ka.beta;
      } else if (kb.nk == 2) {
        k.alpha = kb.alpha, k.beta = kb.beta;
      } else if (ka.nk == 1 && kb.nk == 1) {
        k.alpha = ka.alpha, k.beta = kb.alpha;
      } else {
        k.alpha = ka.nk ? ka.alpha : kb.alpha;
      }
      ExactScalar c = ca * cb;
      r.add(k, s > 0 ? c : -c);
    }
  return r;
}

BipolarElement BipolarElement::times_st(int ds, int dt) const {
  BipolarElement r(mp_, sp_);
  for (auto& [k0, c] : terms_) {
    Key k = k0;
    k.s += ds;
    k.t += dt;
    r.add(k, c);
  }
  return r;
}

BipolarElement BipolarElement::partial(int var) const {
  BipolarElement r(mp_, sp_);
  const VarSpace& sp = *sp_;
  const bool is_x = var >= mp_.x(1) && var < mp_.y(1);
  const bool is_y = var >= mp_.y(1) && var < mp_.theta(1);
  // d^var Q / 2 with Q = s^2 + t^2 + theta^2 = 2|X|^2
  SuperPoly half_dq;
  {
    SuperPoly Q = r_squared_block(sp_, mp_.x_vars()) - r_squared_block(sp_, mp_.y_vars()) +
                  r_squared_block(sp_, mp_.theta_vars());
    half_dq = ospmin::partial(var, Q) * q(rat(1, 2));
  }
  for (auto& [k, c] : terms_) {
    const SuperPoly m = SuperPoly::monomial(sp_, k.mono, c);
    const int sign = (sp.odd(var) && sp.mono_parity(k.mono)) ? -1 : 1;
    auto put = [&](const SuperPoly& poly, Key base) {
      for (auto& [mm, cc] : poly.terms()) {
        base.mono = mm;
        r.add(base, cc);
      }
    };
    put(ospmin::partial(var, m), k);
    const SuperPoly v = SuperPoly::var(sp_, var);
    if (is_x && k.s != 0) {
      Key b = k;
      b.s -= 2;
      put(m * v * q(Rational(k.s)), b);
    }
    if (is_y && k.t != 0) {
      Key b = k;
      b.t -= 2;
      put(m * v * q(Rational(k.t)), b);
    }
    if (k.r != 0 || k.nk > 0) {
      const SuperPoly mq = m * half_dq * ExactScalar(sign);
      for (auto& [kd, cd] : radial_D(k)) put(mq * cd, kd);
    }
  }
  return r;
}

BipolarElement BipolarElement::s_ds() const {
  BipolarElement r(mp_, sp_);
  const auto xs = mp_.x_vars();
  for (auto& [k, c] : terms_) {
    r.add(k, c * q(Rational(degree_in(k.mono, xs) + k.s)));
    for (auto [kd, cd] : radial_D(k)) {
      kd.s += 2;
      r.add(kd, c * cd);
    }
  }
  return r;
}

BipolarElement BipolarElement::t_dt() const {
  BipolarElement r(mp_, sp_);
  const auto ys = mp_.y_vars();
  for (auto& [k, c] : terms_) {
    r.add(k, c * q(Rational(degree_in(k.mono, ys) + k.t)));
    for (auto [kd, cd] : radial_D(k)) {
      kd.t += 2;
      r.add(kd, c * cd);
    }
  }
  return r;
}

std::string BipolarElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "]*" << sp_->mono_str(k.mono);
    if (k.s) os << "*s^" << k.s;
    if (k.t) os << "*t^" << k.t;
    if (k.r) os << "*r^" << k.r;
    if (k.nk >= 1) os << "*K[" << rat_str(k.alpha) << "]";
    if (k.nk == 2) os << "*K[" << rat_str(k.beta) << "]";
  }
  return os.str();
}

BipolarElement apply_op(const DiffOp& D, const BipolarElement& f) {
  std::map<Mono, BipolarElement, MonoLess> memo;
  memo.emplace(Mono{}, f);
  std::function<const BipolarElement&(const Mono&)> deriv = [&](const Mono& b) -> const BipolarElement& {
    auto it = memo.find(b);
    if (it != memo.end()) return it->second;
    int v = 0;
    while (b.e[v] == 0) ++v;
    Mono rest = b;
    rest.e[v]--;
    BipolarElement g = deriv(rest).partial(v);
    return memo.emplace(b, std::move(g)).first->second;
  };
  BipolarElement r(f.params(), f.space());
  for (auto& [b, c] : D.terms()) {
    const BipolarElement& g = deriv(b);
    if (!g.is_zero()) r += BipolarElement::polynomial(f.params(), c) * g;
  }
  return r;
}

// ---- phi^# and the weight

namespace {

// (1 + eta)^N = (1 - theta^2/(2 s^2))^{N/2} (on_s) or (1 + xi)^N = (1 + theta^2/(2 t^2))^{N/2}
BipolarElement eta_power(const ModelParams& mp, const SpacePtr& sp, int N, bool on_s) {
  BipolarElement r(mp, sp);
  const SuperPoly th2 = r_squared_block(sp, mp.theta_vars());
  SuperPoly pw(sp, ExactScalar(1));
  for (int j = 0; j <= mp.n; ++j) {
    Rational c = binomial_rational(rat(N, 2), j) * pow2(-j);
    if (on_s && j % 2) c = -c;
    for (auto& [m, cm] : pw.terms()) {
      Key k;
      k.mono = m;
      (on_s ? k.s : k.t) = -2 * j;
      r.add(k, cm * q(c));
    }
    pw = pw * th2;
  }
  return r;
}

}  // namespace

BipolarElement phi_sharp(const BipolarElement& f) {
  const ModelParams& mp = f.params();
  const auto xs = mp.x_vars(), ys = mp.y_vars();
  BipolarElement r(mp, f.space());
  std::map<std::pair<int, int>, BipolarElement> cache;
  for (auto& [k, c] : f.terms()) {
    const int a = degree_in(k.mono, xs) + k.s, b = degree_in(k.mono, ys) + k.t;
    auto it = cache.find({a, b});
    if (it == cache.end())
      it = cache.emplace(std::pair{a, b}, eta_power(mp, f.space(), a, true) * eta_power(mp, f.space(), b, false)).first;
    BipolarElement one(mp, f.space());
    one.add(k, c);
    r += it->second * one;
  }
  return r;
}

BipolarElement orbit_weight(const ModelParams& mp, const SpacePtr& sp) {
  return eta_power(mp, sp, mp.p - 3, true) * eta_power(mp, sp, mp.q - 3, false);
}

// ---- the functional

OrbitIntegral::OrbitIntegral(const ModelParams& mp, SpacePtr sp)
    : mp_(mp), sp_(std::move(sp)), theta2_(r_squared_block(sp_, mp.theta_vars())) {}

bool OrbitIntegral::converges(const BipolarElement& f) const {
  for (auto& [k, c] : f.terms()) {
    const int deg = k.mono.degree() + k.s + k.t + k.r;
    if (Rational(mp_.p + mp_.q - 2 * mp_.n - 4 + deg) <= 2 * max0(k.alpha) + 2 * max0(k.beta)) return false;
  }
  return true;
}

ExactScalar OrbitIntegral::berezin(const Mono& theta_part, int j) const {
  {
    std::lock_guard<std::mutex> lk(mtx_);
    auto it = berezin_.find({theta_part, j});
    if (it != berezin_.end()) return it->second;
  }
  SuperPoly g = SuperPoly::monomial(sp_, theta_part);
  for (int i = 0; i < j; ++i) g = g * theta2_;
  for (int v : mp_.theta_vars()) g = ospmin::partial(v, g);
  ExactScalar val = g.coeff(Mono{});
  std::lock_guard<std::mutex> lk(mtx_);
  berezin_.emplace(std::pair{theta_part, j}, val);
  return val;
}

// Integral of one term after phi^# and the weight: restrict s = t = rho, expand
// |X| = sqrt(rho^2 + theta^2/2), then Berezin, sphere and radial integrals.
ExactScalar OrbitIntegral::term(const Key& k) const {
  if (k.nk != 2) throw DomainError("int_C needs a product of two Bessel factors");
  Mono th;
  std::vector<int> a, b;
  for (int v : mp_.x_vars()) a.push_back(k.mono.e[v]);
  for (int v : mp_.y_vars()) b.push_back(k.mono.e[v]);
  for (int v : mp_.theta_vars()) th.e[v] = k.mono.e[v];
  const int te = th.degree();
  if (te % 2) return ExactScalar();
  const int i = mp_.n - te / 2;  // order of the |X| Taylor term
  ExactScalar ang = sphere_moment(mp_.p - 1, a);
  if (ang.is_zero()) return ang;
  ang *= sphere_moment(mp_.q - 1, b);
  if (ang.is_zero()) return ang;
  ExactScalar ber = berezin(th, i);
  if (ber.is_zero()) return ber;
  // D^i of r^k.r K K
  std::map<Key, ExactScalar> cur;
  {
    Key base = k;
    base.mono = Mono{};
    base.s = base.t = 0;
    cur.emplace(base, ExactScalar(1));
  }
  for (int step = 0; step < i; ++step) {
    std::map<Key, ExactScalar> nxt;
    for (auto& [kk, cc] : cur)
      for (auto& [kd, cd] : radial_D(kk)) nxt[kd] += cc * cd;
    cur.clear();
    for (auto& [kk, cc] : nxt)
      if (!cc.is_zero()) cur.emplace(kk, cc);
  }
  const int base_pow = mp_.p + mp_.q - 5 + degree_in(k.mono, mp_.x_vars()) + degree_in(k.mono, mp_.y_vars()) + k.s + k.t;
  ExactScalar rad;
  for (auto& [kk, cc] : cur) rad += cc * radial_moment(Rational(base_pow + kk.r + 1), kk.alpha, kk.beta);
  // (theta^2/2)^i / i!
  const Rational taylor = pow2(-i) / Rational(factorial(i));
  return ExactScalar(rat(1, 2)) * ang * ber * rad * q(taylor);
}

ExactScalar OrbitIntegral::operator()(const BipolarElement& f) const {
  if (!converges(f)) throw DivergenceError("int_C: integrand outside the convergent class");
  const BipolarElement wgt = orbit_weight(mp_, sp_);
  ExactScalar total;
  for (auto& [k, c] : f.terms()) {
    ExactScalar v;
    bool have = false;
    {
      std::lock_guard<std::mutex> lk(mtx_);
      auto it = memo_.find(k);
      if (it != memo_.end()) v = it->second, have = true;
    }
    if (!have) {
      BipolarElement one(mp_, sp_);
      one.add(k, ExactScalar(1));
      BipolarElement g = wgt * phi_sharp(one);
      for (auto& [kg, cg] : g.terms()) v += cg * term(kg);
      std::lock_guard<std::mutex> lk(mtx_);
      memo_.emplace(k, v);
    }
    total += c * v;
  }
  return total;
}

ExactScalar OrbitIntegral::pairing(const MixedElement& f, const MixedElement& g) const {
  return (*this)(BipolarElement::pair(mp_, f, g));
}

ExactScalar OrbitIntegral::sesquilinear(const MixedElement& f, const MixedElement& g) const {
  return pairing(conj(f), g);
}

MixedElement conj(const MixedElement& f) {
  MixedElement r(f.space(), f.order_class());
  for (auto& [m, h] : f.terms()) {
    RadialElement hc(h.order_class());
    for (auto& [k, c] : h.terms()) hc.add(k.first, k.second, c.conj());
    r.add(m, hc);
  }
  return r;
}

int parity_of(const MixedElement& f) {
  int p = -2;
  for (auto& [m, h] : f.terms()) {
    const int mp = f.space()->mono_parity(m);
    if (p == -2)
      p = mp;
    else if (p != mp)
      return -1;
  }
  return p == -2 ? 0 : p;
}

ExactScalar integral_knu_closed(const ModelParams& mp) {
  const int mu = mp.mu(), nu = mp.nu(), n = mp.n;
  ExactScalar r = q(pow2(mu + nu) / Rational(factorial(n)) * pochhammer(rat(3 - mp.p, 2), n));
  r *= ExactScalar::sqrtpi(mp.p + mp.q - 2);
  r /= gamma_half(rat(mp.p - 1, 2)) * gamma_half(rat(mp.q - 1, 2));
  r *= gamma_half_any(rat(mu - nu, 2) + 1) * gamma_half_any(rat(mu + nu, 2) + 1);
  r *= gamma_half(rat(mu, 2) + 1) * gamma_half(rat(mu, 2) + 1);
  return r / gamma_half(Rational(mu + 2));
}

Rational sigma_quadruple(const ModelParams& mp) {
  const int n = mp.n;
  const Rational h = rat(mp.mu(), 2) + 1, g = rat(mp.mu() + mp.nu(), 2) + 1;
  Rational s = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      for (int k = 0; i + j + k <= n; ++k) {
        const int l = n - i - j - k;
        Rational t = pochhammer(rat(3 - mp.q, 2), k) * pochhammer(rat(3 - mp.p, 2), l) * pochhammer(h, i) *
                     pochhammer(h, j) * pochhammer(g, i + j) / pochhammer(Rational(mp.mu() + 2), i + j);
        t /= Rational(factorial(i) * factorial(j) * factorial(k) * factorial(l));
        s += (i + j + k) % 2 ? -t : t;
      }
  return s;
}

Rational sigma_closed(const ModelParams& mp) {
  return pow2(mp.n) / Rational(factorial(mp.n)) * pochhammer(rat(3 - mp.p, 2), mp.n);
}

// ---- property checks

namespace {

PropertyCheck zero_check(const std::string& name, const std::string& idx, const ExactScalar& v) {
  return {name, idx, v.is_zero(), v.str(), "0"};
}

PropertyCheck eq_check(const std::string& name, const std::string& idx, const ExactScalar& a, const ExactScalar& b) {
  return {name, idx, a == b, a.str(), b.str()};
}

}  // namespace

std::vector<PropertyCheck> verify_integral_properties(const WModule& w, const OrbitIntegral& I,
                                                      const std::vector<std::pair<int, int>>& samples) {
  const ModelParams& mp = w.params();
  const SpacePtr& sp = w.calculus().space();
  const OrbitCalculus& oc = w.calculus();
  std::vector<PropertyCheck> out;
  const BipolarElement R2 = BipolarElement::polynomial(mp, r_squared(sp));
  const auto L = osp_basis(sp);
  const DiffOp E = euler_op(sp);
  for (auto [u, v] : samples) {
    const MixedElement f = conj(w.basis().at(u).value), g = w.basis().at(v).value;
    const int pf = parity_of(f);
    const std::string idx = w.basis()[u].label() + " | " + w.basis()[v].label();
    const BipolarElement F = BipolarElement::pair(mp, f, g);
    out.push_back(zero_check("int_R2f", idx, I(R2 * F)));
    for (size_t a = 0; a < L.size(); ++a) {
      const auto& [ij, X] = L[a];
      out.push_back(zero_check("int_Xf", idx + " L(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")",
                               I(apply_op(X, F))));
    }
    out.push_back(zero_check("int_E_plus_M_minus_2", idx,
                             I(apply_op(E, F) + F * q(Rational(mp.M() - 2)))));
    for (int k = 0; k < w.tkk().dim_plus(); ++k) {
      const DiffOp B = w.pi().bessel(k);
      const int pk = w.tkk().jordan().parity(k);
      ExactScalar lhs = I.pairing(oc.apply_ambient(B, f), g);
      ExactScalar rhs = I.pairing(f, oc.apply_ambient(B, g));
      if (pf * pk % 2) rhs = -rhs;
      out.push_back(eq_check("bessel_symmetric", idx + " k=" + std::to_string(k), lhs, rhs));
    }
    for (int z = 0; z < mp.nvars(); ++z) {
      out.push_back(zero_check("int_bessel_vanishes", idx + " var=" + sp->name(z),
                               I(apply_op(bessel_operator(sp, z, w.lambda()), F))));
      if (sp->odd(z)) continue;
      const BipolarElement lhs = apply_op(DiffOp::d_lower(sp, z), F);
      const BipolarElement zF = BipolarElement::polynomial(mp, SuperPoly::var(sp, z)) * F * q(rat(1, 2));
      const BipolarElement S = zF.times_st(-2, 0), T = zF.times_st(0, -2);
      const BipolarElement rhs = S.s_ds() + S * q(Rational(mp.p - 1)) - T.t_dt() - T * q(Rational(mp.q - 1));
      out.push_back(eq_check("int_derivative", idx + " var=" + sp->name(z), I(lhs), I(rhs)));
    }
  }
  return out;
}

SkewReport verify_skew_symmetry(const WModule& w, const OrbitIntegral& I, int j_max) {
  SkewReport rep;
  const TKK& tkk = w.tkk();
  std::vector<int> idx;
  for (int j = 0; j <= j_max; ++j)
    for (int i : w.level(j)) idx.push_back(i);
  for (int a = 0; a < tkk.dim(); ++a) {
    std::vector<MixedElement> img;
    for (int i : idx) img.push_back(w.apply_basis(a, w.basis()[i].value));
    for (size_t u = 0; u < idx.size(); ++u) {
      const MixedElement& f = w.basis()[idx[u]].value;
      const bool sign = tkk.parity(a) * parity_of(f) % 2;
      for (size_t v = 0; v < idx.size(); ++v) {
        const MixedElement& g = w.basis()[idx[v]].value;
        ExactScalar l = I.sesquilinear(img[u], g);
        ExactScalar r = I.sesquilinear(f, img[v]);
        ++rep.checked;
        if (!l.is_zero()) ++rep.nonzero_pairs;
        ExactScalar tot = sign ? l - r : l + r;
        if (!tot.is_zero())
          rep.failures.push_back({"skew_symmetric",
                                  tkk.name(a) + " f=" + w.basis()[idx[u]].label() + " g=" + w.basis()[idx[v]].label(),
                                  false, l.str(), (-(sign ? -r : r)).str()});
      }
    }
  }
  return rep;
}

GramReport gram_nondegeneracy(const WModule& w, const OrbitIntegral& I, int j) {
  GramReport rep;
  const std::vector<int> idx = w.level(j);
  rep.size = static_cast<int>(idx.size());
  std::vector<std::vector<ExactScalar>> G(idx.size(), std::vector<ExactScalar>(idx.size()));
  for (size_t u = 0; u < idx.size(); ++u)
    for (size_t v = 0; v < idx.size(); ++v) G[u][v] = I.sesquilinear(w.basis()[idx[u]].value, w.basis()[idx[v]].value);
  rep.superhermitian = true;
  for (size_t u = 0; u < idx.size(); ++u)
    for (size_t v = 0; v < idx.size(); ++v) {
      const int s = parity_of(w.basis()[idx[u]].value) * parity_of(w.basis()[idx[v]].value);
      ExactScalar t = G[v][u].conj();
      if (s % 2) t = -t;
      if (G[u][v] != t) rep.superhermitian = false;
    }
  rep.det = det_berkowitz(G);
  rep.ok = !rep.det.is_zero();
  return rep;
}

}  // namespace ospmin
