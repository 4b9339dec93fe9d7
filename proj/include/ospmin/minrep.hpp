#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ospmin/harmonics.hpp"
#include "ospmin/liealg.hpp"
#include "ospmin/radial.hpp"

namespace ospmin {

struct WBasisElement {
  int j = 0, k = 0, l = 0;
  int a = 0, b = 0;  // indices into the harmonic bases H_k(R^{mu+2}), H_l(R^{nu+2})
  MixedElement value;
  std::string label() const;
};

// W = U(g) K~_{nu/2}(|X|) mod R^2, truncated to levels j <= max_level, with the
// basis phi_k psi_l Lambda^{mu+2k, nu+2l}_{2,j-k}(|X|).
class WModule {
 public:
  // Throws DomainError unless p+q is even and nu is not in -2N.
  WModule(const TKK& tkk, int max_level);

  const ModelParams& params() const { return mp_; }
  const TKK& tkk() const { return tkk_; }
  const PiLambda& pi() const { return *pi_; }
  const OrbitCalculus& calculus() const { return *oc_; }
  int max_level() const { return max_level_; }
  int mu() const { return mp_.mu(); }
  int nu() const { return mp_.nu(); }
  int half_gap() const { return (mu() - nu()) / 2; }  // (mu - nu)/2
  Rational lambda() const { return pi_->lambda(); }

  const std::vector<WBasisElement>& basis() const { return basis_; }
  // Basis indices of level j, in order.
  std::vector<int> level(int j) const;
  const HarmonicBasis& harm_mu(int k) const { return hmu_.at(k); }
  const HarmonicBasis& harm_nu(int l) const { return hnu_.at(l); }

  // phi psi Lambda^{mu+2k,nu+2l}_{2,j-k} for arbitrary phi in H_k(R^{mu+2}), psi in
  // H_l(R^{nu+2}); zero if j < k.
  MixedElement element(int j, int k, int l, const SuperPoly& phi, const SuperPoly& psi) const;

  // pi_C(X) on a MixedElement
  MixedElement apply(const TKKElement& x, const MixedElement& f) const;
  MixedElement apply_basis(int a, const MixedElement& f) const;

  // Coordinates of f on the basis elements of levels lo..hi (indices into
  // basis()); nullopt if f has a nonzero residual there.
  std::optional<std::vector<GaussQ>> coords(const MixedElement& f, int lo, int hi) const;
  MixedElement expand(const std::vector<GaussQ>& coords) const;
  // act(X, v) on coordinate vectors over basis(); throws on a nonzero residual
  // or when the result needs a level above max_level.
  std::vector<GaussQ> act(const TKKElement& x, const std::vector<GaussQ>& v) const;

  // B^+_i (var in the mu block) or B^-_i (var in the nu block).
  DiffOp bessel_pm(int var) const;
  bool in_mu_block(int var) const;

 private:
  const TKK& tkk_;
  ModelParams mp_;
  int max_level_;
  std::unique_ptr<PiLambda> pi_;
  std::unique_ptr<OrbitCalculus> oc_;
  std::vector<HarmonicBasis> hmu_, hnu_;
  std::vector<WBasisElement> basis_;
  mutable std::mutex solver_mtx_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<EchelonSolver<std::tuple<Mono, int, int, int>>>> solvers_;
  const EchelonSolver<std::tuple<Mono, int, int, int>>& solver(int lo, int hi) const;
};

struct IdentityReport {
  std::string name;
  std::string indices;
  bool ok = false;
  bool skipped = false;  // precondition failed; reported, not counted
  std::string lhs, rhs;
};

// Closed-form Bessel operator action on one basis element and one coordinate variable.
IdentityReport verify_bessel_action(const WModule& w, int basis_index, int var);
// pi(-L_e) coefficients on one basis element.
IdentityReport verify_le_action(const WModule& w, int basis_index);

// Intertwiner W_j -> H_j(R^{mu+3}) (x) H_{(mu-nu)/2+j}(R^{nu+3}).
class PhiIso {
 public:
  explicit PhiIso(const WModule& w);
  const SpacePtr& space() const { return ext_; }
  int s0() const { return s0_; }  // extra variable of the mu block
  int t0() const { return t0_; }  // extra variable of the nu block
  SuperPoly embed(const SuperPoly& f) const;
  // Image of phi psi Lambda^{mu+2k,nu+2l}_{2,j-k}; zero outside the index range.
  SuperPoly image(int j, int k, int l, const SuperPoly& phi, const SuperPoly& psi) const;
  SuperPoly image(int basis_index) const;
  bool harmonic(const SuperPoly& f) const;
  // Relations 2 L_{z,x0} Phi = Phi(i (B(z) - z)) for z in the x/theta block and
  // 2 L_{y,yq} Phi = Phi(-i (B(y) + y)) for y in the y block; x0, yq are the extra
  // variables of those blocks. Both right-hand sides change sign when the x/theta
  // block carries nu.
  IdentityReport verify_intertwiner(int basis_index, int var) const;

 private:
  const WModule& w_;
  SpacePtr ext_;
  int s0_ = 0, t0_ = 0, x0_ = 0, yq_ = 0;
  std::vector<int> map_;  // model var -> ext var
  std::vector<int> mu_ext_, nu_ext_;
  SuperPoly S2_, T2_;
  SuperPoly radial_gegenbauer(const Rational& lambda, int n, int extra, const SuperPoly& norm2) const;
  // Phi image of the closed-form expansion of (B^{+-}(var)) applied to a basis element
  SuperPoly image_of_bessel(int j, int k, int l, const SuperPoly& phi, const SuperPoly& psi, int var) const;
};

// dim W_j from the decomposition sum_{k<=j} sum_l dim H_k(R^{mu+2}) dim H_l(R^{nu+2})
long dim_wj_decomposition(const ModelParams& mp, int j);
// dim H_j(R^{mu+3}) dim H_{(mu-nu)/2+j}(R^{nu+3})
long dim_wj_product(const ModelParams& mp, int j);

struct GKReport {
  int degree = -1;
  bool stabilized = false;
  std::vector<long> partial_sums;
};
// Growth degree of k -> dim U_k(g) W_0 = sum_{j<=k} dim W_j by finite differences.
GKReport gk_dimension(const ModelParams& mp, int k_max);

}  // namespace ospmin
