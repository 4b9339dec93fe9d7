#include "ospmin/fourier.hpp"

namespace ospmin {

PiHat::PiHat(const TKK& tkk, const RepParams& rp, SpacePtr sp)
    : tkk_(tkk), rp_(rp), sp_(std::move(sp)), pi_(tkk, rp, sp_) {
  E_ = euler_op(sp_);
  R2_ = r2_op(sp_);
}

DiffOp PiHat::plus_image(int k) const {
  const int v = tkk_.jordan().jvar(k);
  DiffOp x = DiffOp::mult(SuperPoly::var(sp_, v));
  DiffOp first = x * (E_ * ExactScalar(2) - DiffOp::scalar(sp_, ExactScalar(rp_.lambda)));
  return R2_ * DiffOp::d_lower(sp_, v) - first;
}

DiffOp PiHat::operator()(const TKKElement& x) const {
  const JordanSpin& J = tkk_.jordan();
  const int d = J.dim();
  DiffOp r(sp_);
  for (int k = 0; k < d; ++k) {
    if (!x.plus[k].is_zero()) r += plus_image(k) * ExactScalar(k == 0 ? -x.plus[k] : x.plus[k]);
    if (!x.minus[k].is_zero()) r += DiffOp::d_lower(sp_, J.jvar(k)) * ExactScalar(x.minus[k]);
  }
  // istr: as for pi_lambda, except that L_e goes to E - lambda/2 instead of -E + lambda/2
  TKKElement t = tkk_.zero();
  t.istr = x.istr;
  const GaussQ te0 = x.istr[0][0];
  r += pi_(t);
  if (!te0.is_zero())
    r += (E_ * ExactScalar(2) - DiffOp::scalar(sp_, ExactScalar(rp_.lambda))) * ExactScalar(te0);
  return r;
}

const DiffOp& PiHat::basis_image(int a) const {
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(a, (*this)(tkk_.basis(a))).first->second;
}

DiffOp fourier_conjugate(const DiffOp& D) {
  const SpacePtr& sp = D.space();
  const int nv = sp->size();
  const ExactScalar I = ExactScalar::i();
  std::vector<DiffOp> xi(nv), di(nv);
  for (int v = 0; v < nv; ++v) {
    xi[v] = DiffOp::d_lower(sp, v) * I;
    // d^v = sum_j beta^{vj} d_j
    SuperPoly up(sp);
    for (auto [j, b] : sp->beta_inv_row(v)) up += SuperPoly::var(sp, j) * ExactScalar(static_cast<long>(b));
    di[v] = DiffOp::mult(up) * I;
  }
  DiffOp r(sp);
  for (auto& [b, c] : D.terms()) {
    DiffOp db = DiffOp::scalar(sp, ExactScalar(1));
    for (int v = 0; v < nv; ++v)
      for (int e = 0; e < b.e[v]; ++e) db = db * di[v];
    for (auto& [m, a] : c.terms()) {
      DiffOp t = DiffOp::scalar(sp, a);
      for (int v = 0; v < nv; ++v)
        for (int e = 0; e < m.e[v]; ++e) t = t * xi[v];
      r += t * db;
    }
  }
  return r;
}

Rational mu_critical(const ModelParams& mp) {
  const int s = mp.p + mp.q - 2 * mp.n;
  return rat(-(s - 4), 4 * (s - 1));
}

namespace {

FourierCheck row(std::string name, std::string idx, const DiffOp& lhs, const DiffOp& rhs) {
  FourierCheck c{std::move(name), std::move(idx), lhs == rhs, "", ""};
  if (!c.ok) {
    c.lhs = lhs.str();
    c.rhs = rhs.str();
  }
  return c;
}

}  // namespace

KerDeltaReport verify_ker_delta(const TKK& tkk, const Rational& lambda) {
  SpacePtr sp = model_space(tkk.params());
  PiHat ph(tkk, {lambda}, sp);
  const ModelParams& mp = tkk.params();
  const DiffOp Delta = laplace_op(sp);
  KerDeltaReport rep;
  rep.preserves = true;
  for (int a = 0; a < tkk.dim(); ++a) {
    DiffOp C = supercommutator(Delta, ph.basis_image(a));
    DiffOp expect(sp), kills(sp);
    switch (tkk.grade(a)) {
      case 0: {
        const int v = tkk.jordan().jvar(a);
        DiffOp x = DiffOp::mult(SuperPoly::var(sp, v));
        kills = x * Delta * ExactScalar(-4);
        expect = DiffOp::d_lower(sp, v) * ExactScalar(2 * (lambda - 2 + mp.M())) + kills;
        break;
      }
      case 1:
        expect = kills = Delta * ExactScalar(2 * tkk.basis(a).istr[0][0]);
        break;
      default:
        break;
    }
    rep.rows.push_back(row("commutator_with_laplacian", tkk.name(a), C, expect));
    if (C != kills) rep.preserves = false;
  }
  return rep;
}

std::vector<FourierCheck> verify_adjoint(const TKK& tkk, const Rational& lambda) {
  const Rational dual = -lambda - 2 * tkk.params().M();
  SpacePtr sp = model_space(tkk.params());
  PiLambda pi(tkk, {lambda}, sp), pid(tkk, {dual}, sp);
  PiHat ph(tkk, {lambda}, sp), phd(tkk, {dual}, sp);
  std::vector<FourierCheck> out;
  for (int a = 0; a < tkk.dim(); ++a) {
    out.push_back(row("adjoint_pi", tkk.name(a), formal_adjoint(pi.basis_image(a)), -pid.basis_image(a)));
    out.push_back(row("adjoint_pi_hat", tkk.name(a), formal_adjoint(ph.basis_image(a)), -phd.basis_image(a)));
  }
  return out;
}

std::vector<FourierCheck> verify_fourier_table(const TKK& tkk, const Rational& lambda) {
  SpacePtr sp = model_space(tkk.params());
  PiLambda pid(tkk, {-lambda - 2 * tkk.params().M()}, sp);
  PiHat ph(tkk, {lambda}, sp);
  std::vector<FourierCheck> out;
  for (int a = 0; a < tkk.dim(); ++a)
    out.push_back(row("fourier_table", tkk.name(a), fourier_conjugate(pid.basis_image(a)), ph.basis_image(a)));
  return out;
}

}  // namespace ospmin
