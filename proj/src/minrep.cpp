#include "ospmin/minrep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ospmin {

namespace {

using CoordKey = std::tuple<Mono, int, int, int>;

bool in_minus_2N(int v) { return v <= 0 && v % 2 == 0; }

ExactScalar q(const Rational& r) { return ExactScalar(r); }

int find_basis(const TKK& tkk, const std::string& name) {
  for (int a = 0; a < tkk.dim(); ++a)
    if (tkk.name(a) == name) return a;
  throw std::invalid_argument("no TKK basis element " + name);
}

}  // namespace

std::string WBasisElement::label() const {
  std::ostringstream os;
  os << "j=" << j << ",k=" << k << ",l=" << l << ",a=" << a << ",b=" << b;
  return os.str();
}

WModule::WModule(const TKK& tkk, int max_level) : tkk_(tkk), mp_(tkk.params()), max_level_(max_level) {
  if ((mp_.p + mp_.q) % 2) throw DomainError("p+q odd: W is not admissible with finite l-range");
  if (in_minus_2N(mp_.nu())) throw DomainError("nu = " + std::to_string(mp_.nu()) + " lies in -2N");
  if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
  pi_ = std::make_unique<PiLambda>(tkk_, RepParams{Rational(2 - mp_.M())});
  oc_ = std::make_unique<OrbitCalculus>(mp_, pi_->space());
  const SpacePtr& sp = pi_->space();
  for (int k = 0; k <= max_level + 1; ++k) hmu_.push_back(harmonic_basis(sp, mp_.mu_block(), k));
  for (int l = 0; l <= half_gap() + max_level + 1; ++l) hnu_.push_back(harmonic_basis(sp, mp_.nu_block(), l));
  for (int j = 0; j <= max_level; ++j)
    for (int k = 0; k <= j; ++k)
      for (int l = 0; l <= half_gap() + j; ++l)
        for (int a = 0; a < static_cast<int>(hmu_[k].basis.size()); ++a)
          for (int b = 0; b < static_cast<int>(hnu_[l].basis.size()); ++b) {
            WBasisElement e{j, k, l, a, b, {}};
            e.value = element(j, k, l, hmu_[k].basis[a], hnu_[l].basis[b]);
            basis_.push_back(std::move(e));
          }
}

std::vector<int> WModule::level(int j) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
    if (basis_[i].j == j) out.push_back(i);
  return out;
}

MixedElement WModule::element(int j, int k, int l, const SuperPoly& phi, const SuperPoly& psi) const {
  if (k < 0 || l < 0 || j < k) return MixedElement(pi_->space(), rat(mp_.nu(), 2));
  const LaguerreFn lag = laguerre(mu() + 2 * k, nu() + 2 * l, j - k);
  return oc_->reduce(MixedElement::product(phi * psi, lag.value));
}

MixedElement WModule::apply(const TKKElement& x, const MixedElement& f) const { return oc_->apply((*pi_)(x), f); }

MixedElement WModule::apply_basis(int a, const MixedElement& f) const {
  return oc_->apply(pi_->basis_image(a), f);
}

const EchelonSolver<CoordKey>& WModule::solver(int lo, int hi) const {
  std::lock_guard<std::mutex> lk(solver_mtx_);
  auto& slot = solvers_[{lo, hi}];
  if (!slot) {
    slot = std::make_shared<EchelonSolver<CoordKey>>();
    for (int j = lo; j <= hi; ++j)
      for (int i : level(j))
        if (!slot->add(basis_[i].value.coords()))
          throw std::logic_error("W basis is linearly dependent at " + basis_[i].label());
  }
  return *slot;
}

std::optional<std::vector<GaussQ>> WModule::coords(const MixedElement& f, int lo, int hi) const {
  lo = std::max(lo, 0);
  hi = std::min(hi, max_level_);
  auto sol = solver(lo, hi).solve(f.coords());
  if (!sol) return std::nullopt;
  std::vector<GaussQ> out(basis_.size());
  int pos = 0;
  for (int j = lo; j <= hi; ++j)
    for (int i : level(j)) out[i] = (*sol)[pos++];
  return out;
}

MixedElement WModule::expand(const std::vector<GaussQ>& c) const {
  MixedElement f(pi_->space(), rat(mp_.nu(), 2));
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) f += basis_[i].value * ExactScalar(c[i]);
  return f;
}

std::vector<GaussQ> WModule::act(const TKKElement& x, const std::vector<GaussQ>& v) const {
  int lo = max_level_ + 1, hi = -1;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      lo = std::min(lo, basis_[i].j);
      hi = std::max(hi, basis_[i].j);
    }
  if (hi < 0) return std::vector<GaussQ>(basis_.size());
  if (hi + 1 > max_level_) throw std::out_of_range("act: result may leave the truncation");
  MixedElement img = apply(x, expand(v));
  auto c = coords(img, lo - 1, hi + 1);
  if (!c) throw std::runtime_error("act: image has a residual outside W");
  return *c;
}

bool WModule::in_mu_block(int var) const {
  auto b = mp_.mu_block();
  return std::find(b.begin(), b.end(), var) != b.end();
}

DiffOp WModule::bessel_pm(int var) const {
  const SpacePtr& sp = pi_->space();
  DiffOp B = bessel_operator(sp, var, lambda());
  DiffOp v = DiffOp::mult(SuperPoly::var(sp, var));
  const bool y = var >= mp_.y(1) && var < mp_.theta(1);
  return y ? B + v : B - v;
}

namespace {

struct ActionTerm {
  int j, k, l;
  SuperPoly phi, psi;
  ExactScalar c;
};

// Expansion of B^{+-}(var) (phi psi Lambda^{mu+2k,nu+2l}_{2,j-k}) in closed form.
std::vector<ActionTerm> bessel_action_terms(const WModule& w, int j, int k, int l, const SuperPoly& phi,
                                   const SuperPoly& psi, int var) {
  const ModelParams& mp = w.params();
  const int mu = w.mu(), nu = w.nu();
  std::vector<ActionTerm> out;
  if (w.in_mu_block(var)) {
    out.push_back({j, k + 1, l, raise_harmonic(mp, phi, k, var), psi, q(j + mu + k + 1)});
    if (k > 0) out.push_back({j, k - 1, l, lower_harmonic(mp, phi, k, var), psi, q(4 * (j - k + 1))});
  } else {
    out.push_back({j, k, l + 1, phi, raise_harmonic(mp, psi, l, var), q(-(j + rat(mu - nu, 2) - l))});
    if (l > 0)
      out.push_back({j, k, l - 1, phi, lower_harmonic(mp, psi, l, var), q(-4 * (j + rat(mu + nu, 2) + l))});
  }
  return out;
}

}  // namespace

IdentityReport verify_bessel_action(const WModule& w, int basis_index, int var) {
  const WBasisElement& e = w.basis().at(basis_index);
  IdentityReport rep;
  rep.name = w.in_mu_block(var) ? "bessel_plus" : "bessel_minus";
  rep.indices = e.label() + ",var=" + w.calculus().space()->name(var);
  if (w.nu() + 2 * e.l == 0) {
    rep.skipped = true;
    rep.ok = true;
    rep.lhs = rep.rhs = "precondition nu+2l != 0 fails";
    return rep;
  }
  const SuperPoly& phi = w.harm_mu(e.k).basis[e.a];
  const SuperPoly& psi = w.harm_nu(e.l).basis[e.b];
  MixedElement lhs = w.calculus().apply(w.bessel_pm(var), e.value);
  MixedElement rhs(w.calculus().space(), rat(w.nu(), 2));
  for (auto& t : bessel_action_terms(w, e.j, e.k, e.l, phi, psi, var))
    if (!t.phi.is_zero() && !t.psi.is_zero()) rhs += w.element(t.j, t.k, t.l, t.phi, t.psi) * t.c;
  rep.ok = lhs == rhs;
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  return rep;
}

IdentityReport verify_le_action(const WModule& w, int basis_index) {
  const WBasisElement& e = w.basis().at(basis_index);
  IdentityReport rep;
  rep.name = "Le_action";
  rep.indices = e.label();
  const int a_le = find_basis(w.tkk(), "Le");
  const SuperPoly& phi = w.harm_mu(e.k).basis[e.a];
  const SuperPoly& psi = w.harm_nu(e.l).basis[e.b];
  MixedElement lhs = -w.apply_basis(a_le, e.value);
  const int j = e.j, k = e.k, l = e.l, mu = w.mu(), nu = w.nu();
  const Rational den = 2 * j + mu + 1;
  const Rational up = Rational((j - k + 1) * (j + k + mu + 1)) / den;
  const Rational down = (j + l + rat(mu + nu, 2)) * (j - l + rat(mu - nu, 2)) / den;
  MixedElement rhs = w.element(j + 1, k, l, phi, psi) * q(up) - w.element(j - 1, k, l, phi, psi) * q(down);
  rep.ok = lhs == rhs;
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  return rep;
}

PhiIso::PhiIso(const WModule& w) : w_(w) {
  const ModelParams& mp = w.params();
  std::vector<std::string> even, odd;
  std::vector<int> signs;
  for (int i = 1; i <= mp.p - 1; ++i) even.push_back("x" + std::to_string(i)), signs.push_back(1);
  for (int i = 1; i <= mp.q - 1; ++i) even.push_back("y" + std::to_string(i)), signs.push_back(-1);
  even.push_back("x0"), signs.push_back(1);
  even.push_back("y" + std::to_string(mp.q)), signs.push_back(-1);
  for (int i = 1; i <= 2 * mp.n; ++i) odd.push_back("th" + std::to_string(i));
  ext_ = VarSpace::standard(even, signs, odd);
  x0_ = mp.p + mp.q - 2;
  yq_ = x0_ + 1;
  for (int v = 0; v < mp.nvars(); ++v) map_.push_back(v < mp.theta(1) ? v : v + 2);
  s0_ = mp.split() ? x0_ : yq_;
  t0_ = mp.split() ? yq_ : x0_;
  for (int v : mp.mu_block()) mu_ext_.push_back(map_[v]);
  for (int v : mp.nu_block()) nu_ext_.push_back(map_[v]);
  mu_ext_.push_back(s0_);
  nu_ext_.push_back(t0_);
  // Euclidean norms: the y block carries the negative form.
  S2_ = r_squared_block(ext_, mu_ext_);
  T2_ = r_squared_block(ext_, nu_ext_);
  if (mp.split())
    T2_ = -T2_;
  else
    S2_ = -S2_;
}

SuperPoly PhiIso::embed(const SuperPoly& f) const {
  SuperPoly out(ext_);
  for (auto& [m, c] : f.terms()) {
    Mono e;
    for (int v = 0; v < static_cast<int>(map_.size()); ++v) e.e[map_[v]] = m.e[v];
    out.add_term(e, c);
  }
  return out;
}

SuperPoly PhiIso::radial_gegenbauer(const Rational& lambda, int n, int extra, const SuperPoly& norm2) const {
  UniPoly g = gegenbauer(lambda, n);
  SuperPoly out(ext_);
  SuperPoly z = SuperPoly::var(ext_, extra);
  for (int i = 0; i < static_cast<int>(g.c.size()); ++i) {
    if (g.c[i].is_zero()) continue;
    if ((n - i) % 2) throw std::logic_error("Gegenbauer polynomial of mixed parity");
    SuperPoly t(ext_, g.c[i]);
    for (int e = 0; e < i; ++e) t = t * z;
    for (int e = 0; e < (n - i) / 2; ++e) t = t * norm2;
    out += t;
  }
  return out;
}

SuperPoly PhiIso::image(int j, int k, int l, const SuperPoly& phi, const SuperPoly& psi) const {
  const int mu = w_.mu(), nu = w_.nu(), hg = w_.half_gap();
  if (k < 0 || l < 0 || k > j || l > j + hg) return SuperPoly(ext_);
  ExactScalar c = ExactScalar(1) / q(pochhammer(Rational(mu + j + 1), k));
  for (int i = 0; i < k; ++i) c *= ExactScalar(GaussQ(0, -4));
  ExactScalar d = ExactScalar(1) / q(pochhammer(Rational(-j - hg), l));
  for (int i = 0; i < l; ++i) d *= ExactScalar(GaussQ(0, 4));
  SuperPoly gs = radial_gegenbauer(k + rat(mu + 1, 2), j - k, s0_, S2_);
  SuperPoly gt = radial_gegenbauer(l + rat(nu + 1, 2), j - l + hg, t0_, T2_);
  return (embed(phi) * embed(psi) * gs * gt) * (c * d);
}

SuperPoly PhiIso::image(int basis_index) const {
  const WBasisElement& e = w_.basis().at(basis_index);
  return image(e.j, e.k, e.l, w_.harm_mu(e.k).basis[e.a], w_.harm_nu(e.l).basis[e.b]);
}

bool PhiIso::harmonic(const SuperPoly& f) const {
  return laplacian_block(f, mu_ext_).is_zero() && laplacian_block(f, nu_ext_).is_zero();
}

SuperPoly PhiIso::image_of_bessel(int j, int k, int l, const SuperPoly& phi, const SuperPoly& psi,
                                  int var) const {
  SuperPoly out(ext_);
  for (auto& t : bessel_action_terms(w_, j, k, l, phi, psi, var))
    if (!t.phi.is_zero() && !t.psi.is_zero()) out += image(t.j, t.k, t.l, t.phi, t.psi) * t.c;
  return out;
}

IdentityReport PhiIso::verify_intertwiner(int basis_index, int var) const {
  const WBasisElement& e = w_.basis().at(basis_index);
  const ModelParams& mp = w_.params();
  IdentityReport rep;
  const bool y = var >= mp.y(1) && var < mp.theta(1);
  rep.name = y ? "phi_intertwines_y" : "phi_intertwines_x";
  rep.indices = e.label() + ",var=" + w_.calculus().space()->name(var);
  if (w_.nu() + 2 * e.l == 0) {
    rep.skipped = true;
    rep.ok = true;
    rep.lhs = rep.rhs = "precondition nu+2l != 0 fails";
    return rep;
  }
  const SuperPoly& phi = w_.harm_mu(e.k).basis[e.a];
  const SuperPoly& psi = w_.harm_nu(e.l).basis[e.b];
  DiffOp L = L_op(ext_, map_[var], y ? yq_ : x0_) * ExactScalar(2);
  SuperPoly lhs = L.apply(image(basis_index));
  // In the non-split case the blocks trade places, which amounts to the
  // opposite ambient form and flips every L_{ij}.
  ExactScalar c = y ? -ExactScalar::i() : ExactScalar::i();
  if (!mp.split()) c = -c;
  SuperPoly rhs = image_of_bessel(e.j, e.k, e.l, phi, psi, var) * c;
  rep.ok = lhs == rhs;
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  return rep;
}

namespace {

struct BlockDims {
  int m_mu, n_mu, m_nu, n_nu;  // even dimension and 2n of R^{mu+2}, R^{nu+2}
};

BlockDims block_dims(const ModelParams& mp) {
  if (mp.split()) return {mp.p - 1, 2 * mp.n, mp.q - 1, 0};
  return {mp.q - 1, 0, mp.p - 1, 2 * mp.n};
}

}  // namespace

long dim_wj_decomposition(const ModelParams& mp, int j) {
  BlockDims b = block_dims(mp);
  const int hg = (mp.mu() - mp.nu()) / 2;
  long s = 0;
  for (int k = 0; k <= j; ++k)
    for (int l = 0; l <= hg + j; ++l) s += dim_formula(b.m_mu, b.n_mu, k) * dim_formula(b.m_nu, b.n_nu, l);
  return s;
}

long dim_wj_product(const ModelParams& mp, int j) {
  BlockDims b = block_dims(mp);
  const int hg = (mp.mu() - mp.nu()) / 2;
  return dim_formula(b.m_mu + 1, b.n_mu, j) * dim_formula(b.m_nu + 1, b.n_nu, hg + j);
}

GKReport gk_dimension(const ModelParams& mp, int k_max) {
  if ((mp.p + mp.q) % 2) throw DomainError("p+q odd: dim W_j is infinite");
  GKReport rep;
  long acc = 0;
  for (int k = 0; k <= k_max; ++k) {
    acc += dim_wj_decomposition(mp, k);
    rep.partial_sums.push_back(acc);
  }
  // Difference until the tail (from the first index where all block dimension
  // formulas are polynomial) is constant and nonzero.
  const int tail_start = 2 * mp.n + 2;
  std::vector<long> seq = rep.partial_sums;
  for (int d = 0; static_cast<int>(seq.size()) > tail_start + 2; ++d) {
    bool constant = true;
    for (size_t i = tail_start + 1; i < seq.size(); ++i)
      if (seq[i] != seq[tail_start]) constant = false;
    if (constant && seq[tail_start] != 0) {
      rep.degree = d;
      rep.stabilized = true;
      return rep;
    }
    std::vector<long> nxt;
    for (size_t i = 1; i < seq.size(); ++i) nxt.push_back(seq[i] - seq[i - 1]);
    seq = std::move(nxt);
  }
  return rep;
}

}  // namespace ospmin
