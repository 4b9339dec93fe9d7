#pragma once

#include <complex>
#include <map>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "ospmin/linalg.hpp"
#include "ospmin/operators.hpp"

namespace ospmin {

// Finite sum of c * r^m * K~_a(r), K~_a(z) = (z/2)^{-a} K_a(z), with all orders a
// in one class mod Z. Terms are kept canonical: orders in {cls, cls+1} for a
// class cls in [0,1), except the half-integer class, where K~_{1/2} = (2/r)K~_{-1/2}
// leaves the single order -1/2.
class RadialElement {
 public:
  using Key = std::pair<int, int>;  // (power of r, order shift)

  RadialElement() = default;
  explicit RadialElement(const Rational& order_class);

  // c * r^m * K~_order(r)
  static RadialElement K(const Rational& order, int m = 0, const ExactScalar& c = ExactScalar(1));

  const Rational& order_class() const { return cls_; }
  Rational order(int shift) const { return cls_ + shift; }
  const std::map<Key, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Adds c r^m K~_{cls+shift} and re-canonicalizes.
  void add(int m, int shift, const ExactScalar& c);

  RadialElement& operator+=(const RadialElement& o);
  RadialElement& operator-=(const RadialElement& o);
  RadialElement& operator*=(const ExactScalar& c);
  RadialElement operator-() const;
  friend RadialElement operator+(RadialElement a, const RadialElement& b) { return a += b; }
  friend RadialElement operator-(RadialElement a, const RadialElement& b) { return a -= b; }
  friend RadialElement operator*(RadialElement a, const ExactScalar& c) { return a *= c; }
  friend RadialElement operator*(const ExactScalar& c, RadialElement a) { return a *= c; }
  friend bool operator==(const RadialElement& a, const RadialElement& b);
  friend bool operator!=(const RadialElement& a, const RadialElement& b) { return !(a == b); }

  RadialElement times_r(int m) const;
  int min_rpower() const;
  std::complex<double> eval(double r) const;
  std::string str() const;

 private:
  Rational cls_ = 0;
  std::map<Key, ExactScalar> terms_;
  bool half() const;
  void canonicalize(std::map<Key, ExactScalar> raw);
};

// Numeric K~_a(x) and I~_a(x) = (x/2)^{-a} I_a(x) (even in x).
double ktilde(double a, double x);
double itilde(double a, double x);

RadialElement d_radial(const RadialElement& f);
// r d/dr
RadialElement euler_radial(const RadialElement& f);

struct LaguerreFn {
  int mu = 0, nu = 0, j = 0;
  RadialElement value;
};

// Lambda^{mu,nu}_{2,j} by the L_e three-term recursion; zero for j < 0.
// Memoized; safe for concurrent callers.
LaguerreFn laguerre(int mu, int nu, int j);

struct RadialIdentity {
  std::string name;
  RadialElement lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

// The four differential/contiguous identities of Lambda^{mu,nu}_{2,j} and the
// L_e recursion, each as lhs/rhs in canonical form. Identities whose shifted
// parameters hit a Gamma pole are omitted.
std::vector<RadialIdentity> laguerre_identities(int mu, int nu, int j);

// t^j coefficient of the generating function
// (1-t)^{-(mu+nu+2)/2} I~_{mu/2}(tx/(1-t)) K~_{nu/2}(x/(1-t)) by Chebyshev
// interpolation in t on [-0.2, 0.2].
double laguerre_numeric_oracle(int mu, int nu, int j, double x, int nodes = 20);

// Polynomial in one variable with exact coefficients, lowest degree first.
struct UniPoly {
  std::vector<ExactScalar> c;
  ExactScalar eval(const ExactScalar& z) const;
  double eval(double z) const;
  UniPoly derivative() const;
  int degree() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const ExactScalar& s, const UniPoly& a);
};

// Normalized Gegenbauer polynomial C~^lambda_n = Gamma(lambda) C^lambda_n, for
// 2*lambda an integer; lambda = 0 is regular for n >= 1.
UniPoly gegenbauer(const Rational& lambda, int n);

// A superpolynomial times a radial factor, summed. Keys are monomials of the
// ambient model space; the radial factor is a function of |X|.
class MixedElement {
 public:
  using Terms = std::map<Mono, RadialElement, MonoLess>;

  MixedElement() = default;
  MixedElement(SpacePtr sp, const Rational& order_class) : sp_(std::move(sp)), cls_(order_class) {}
  static MixedElement product(const SuperPoly& f, const RadialElement& h);

  const SpacePtr& space() const { return sp_; }
  const Rational& order_class() const { return cls_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Mono& m, const RadialElement& h);

  MixedElement& operator+=(const MixedElement& o);
  MixedElement& operator-=(const MixedElement& o);
  MixedElement& operator*=(const ExactScalar& c);
  MixedElement operator-() const;
  friend MixedElement operator+(MixedElement a, const MixedElement& b) { return a += b; }
  friend MixedElement operator-(MixedElement a, const MixedElement& b) { return a -= b; }
  friend MixedElement operator*(MixedElement a, const ExactScalar& c) { return a *= c; }
  friend MixedElement operator*(const ExactScalar& c, MixedElement a) { return a *= c; }
  friend MixedElement operator*(const SuperPoly& f, const MixedElement& g);
  friend bool operator==(const MixedElement& a, const MixedElement& b);
  friend bool operator!=(const MixedElement& a, const MixedElement& b) { return !(a == b); }

  MixedElement times_r(int m) const;
  // Exact coordinates split by (monomial, r power, order shift, sqrt(pi) power).
  SparseVec<std::tuple<Mono, int, int, int>> coords() const;
  std::string str() const;

 private:
  SpacePtr sp_;
  Rational cls_ = 0;
  Terms terms_;
};

// Calculus on the minimal orbit: ambient derivatives via the chain rule for
// |X| = sqrt((s^2+t^2+theta^2)/2), then reduction by R^2 = 0 and
// s^2 + theta^2 = t^2 = |X|^2 (y_{q-1}^2 and x_1^2 are eliminated).
class OrbitCalculus {
 public:
  OrbitCalculus(const ModelParams& mp, SpacePtr sp);

  const ModelParams& params() const { return mp_; }
  const SpacePtr& space() const { return sp_; }
  MixedElement radial(const RadialElement& h) const;
  // Plain derivative d^i on an ambient representative (no reduction).
  MixedElement partial(int i, const MixedElement& f) const;
  MixedElement apply_ambient(const DiffOp& D, const MixedElement& f) const;
  MixedElement reduce(const MixedElement& f) const;
  MixedElement apply(const DiffOp& D, const MixedElement& f) const { return reduce(apply_ambient(D, f)); }

 private:
  ModelParams mp_;
  SpacePtr sp_;
  std::vector<SuperPoly> grad_;  // d^i Q / 4
  SuperPoly x1_repl_, y_repl_;   // x_1^2 -> r^2 - x1_repl_, y_{q-1}^2 -> r^2 - y_repl_
};

MixedElement apply_radial(const OrbitCalculus& oc, const DiffOp& D, const MixedElement& f);

}  // namespace ospmin
