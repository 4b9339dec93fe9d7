#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "ospmin/minrep.hpp"
#include "ospmin/radial.hpp"

namespace ospmin {

struct DivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

// Integral of prod omega_i^{a_i} over S^{d-1}.
ExactScalar sphere_moment(int d, const std::vector<int>& a);

// int_0^oo rho^{sigma-1} K~_alpha K~_beta d rho in closed form; sigma, alpha, beta
// in (1/2)Z. Throws DivergenceError unless sigma > 2max(alpha,0) + 2max(beta,0).
ExactScalar radial_moment(const Rational& sigma, const Rational& alpha, const Rational& beta);
// The same integral by double-exponential quadrature.
double radial_moment_quadrature(double sigma, double alpha, double beta);

// Finite sum of c * x^a y^b theta^e * s^m t^k * |X|^r * K~_alpha(|X|) K~_beta(|X|)
// on the model space, s = |x|, t = |y|. nk in {0,1,2} counts the Bessel factors;
// unused orders are 0.
class BipolarElement {
 public:
  struct Key {
    Mono mono;
    int s = 0, t = 0, r = 0;
    int nk = 0;
    Rational alpha = 0, beta = 0;
    friend bool operator<(const Key& a, const Key& b) {
      return std::tie(a.mono, a.s, a.t, a.r, a.nk, a.alpha, a.beta) <
             std::tie(b.mono, b.s, b.t, b.r, b.nk, b.alpha, b.beta);
    }
    friend bool operator==(const Key& a, const Key& b) {
      return std::tie(a.mono, a.s, a.t, a.r, a.nk, a.alpha, a.beta) ==
             std::tie(b.mono, b.s, b.t, b.r, b.nk, b.alpha, b.beta);
    }
  };

  BipolarElement() = default;
  explicit BipolarElement(const ModelParams& mp, SpacePtr sp) : mp_(mp), sp_(std::move(sp)) {}

  static BipolarElement polynomial(const ModelParams& mp, const SuperPoly& f);
  static BipolarElement single(const ModelParams& mp, const MixedElement& f);
  // f * g with both radial factors kept
  static BipolarElement pair(const ModelParams& mp, const MixedElement& f, const MixedElement& g);

  const ModelParams& params() const { return mp_; }
  const SpacePtr& space() const { return sp_; }
  const std::map<Key, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(Key k, const ExactScalar& c);

  BipolarElement& operator+=(const BipolarElement& o);
  BipolarElement& operator-=(const BipolarElement& o);
  BipolarElement& operator*=(const ExactScalar& c);
  friend BipolarElement operator+(BipolarElement a, const BipolarElement& b) { return a += b; }
  friend BipolarElement operator-(BipolarElement a, const BipolarElement& b) { return a -= b; }
  friend BipolarElement operator*(BipolarElement a, const ExactScalar& c) { return a *= c; }
  // Product; throws if more than two Bessel factors would arise.
  friend BipolarElement operator*(const BipolarElement& a, const BipolarElement& b);
  friend bool operator==(const BipolarElement& a, const BipolarElement& b) { return a.terms_ == b.terms_; }

  BipolarElement times_st(int ds, int dt) const;
  // Plain derivative d^var (even or odd).
  BipolarElement partial(int var) const;
  BipolarElement s_ds() const;
  BipolarElement t_dt() const;
  std::string str() const;

 private:
  ModelParams mp_;
  SpacePtr sp_;
  std::map<Key, ExactScalar> terms_;
};

// A differential operator in normal order applied to a bipolar element.
BipolarElement apply_op(const DiffOp& D, const BipolarElement& f);

// phi^# = exp(theta^2 d_u): x_i -> (1+eta) x_i, y_i -> (1+xi) y_i, s -> (1+eta) s,
// t -> (1+xi) t, theta and |X| fixed; the eta/xi series are expanded.
BipolarElement phi_sharp(const BipolarElement& f);
// (1+eta)^{p-3} (1+xi)^{q-3}
BipolarElement orbit_weight(const ModelParams& mp, const SpacePtr& sp);

// The functional int_C, exact.
class OrbitIntegral {
 public:
  OrbitIntegral(const ModelParams& mp, SpacePtr sp);
  const ModelParams& params() const { return mp_; }

  // Convergence condition p+q-2n-4+k > 2max(alpha,0) + 2max(beta,0) on every term, k the
  // total homogeneity degree.
  bool converges(const BipolarElement& f) const;
  // Throws DivergenceError outside the convergent class, DomainError if a term
  // has fewer than two Bessel factors.
  ExactScalar operator()(const BipolarElement& f) const;
  ExactScalar pairing(const MixedElement& f, const MixedElement& g) const;
  // <f, g> = int conj(f) g; conjugation acts on coefficients only.
  ExactScalar sesquilinear(const MixedElement& f, const MixedElement& g) const;

 private:
  ModelParams mp_;
  SpacePtr sp_;
  SuperPoly theta2_;
  mutable std::mutex mtx_;
  mutable std::map<BipolarElement::Key, ExactScalar> memo_;
  mutable std::map<std::pair<Mono, int>, ExactScalar> berezin_;
  ExactScalar term(const BipolarElement::Key& k) const;
  ExactScalar berezin(const Mono& theta_part, int j) const;
};

MixedElement conj(const MixedElement& f);
int parity_of(const MixedElement& f);

// Closed form of int_C K~_{nu/2}(|X|)^2.
ExactScalar integral_knu_closed(const ModelParams& mp);
// The quadruple sum Sigma(p,q,n) and its simplification 2^n/n! ((3-p)/2)_n.
Rational sigma_quadruple(const ModelParams& mp);
Rational sigma_closed(const ModelParams& mp);

struct PropertyCheck {
  std::string name;
  std::string indices;
  bool ok = false;
  std::string lhs, rhs;
};

// int R^2 F = 0, int X(F) = 0 for osp, int (E+M-2)F = 0, Bessel symmetry,
// integration of a derivative and the vanishing of
// int B_lambda(x_k) f, on pairs of W basis elements (f conjugated).
std::vector<PropertyCheck> verify_integral_properties(const WModule& w, const OrbitIntegral& I,
                                                      const std::vector<std::pair<int, int>>& samples);

// <pi(X) f, g> + (-1)^{|X||f|} <f, pi(X) g> = 0 for all TKK basis X and W basis
// pairs with j <= j_max. Returns failing rows only, plus the number checked.
struct SkewReport {
  long checked = 0;
  long nonzero_pairs = 0;
  std::vector<PropertyCheck> failures;
};
SkewReport verify_skew_symmetry(const WModule& w, const OrbitIntegral& I, int j_max);

struct GramReport {
  int size = 0;
  ExactScalar det;
  bool superhermitian = false;
  bool ok = false;  // det != 0
};
GramReport gram_nondegeneracy(const WModule& w, const OrbitIntegral& I, int j);

}  // namespace ospmin
