#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ospmin {

using Rational = mpq_class;
using BigInt = mpz_class;

Rational rat(long num, long den = 1);
std::string rat_str(const Rational& r);
Rational parse_rational(const std::string& s);

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Gaussian rational re + i*im.
struct GaussQ {
  Rational re, im;

  GaussQ() = default;
  GaussQ(Rational r) : re(std::move(r)), im(0) {}
  GaussQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussQ(long v) : re(v), im(0) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussQ conj() const { return {re, -im}; }
  GaussQ inverse() const;

  GaussQ& operator+=(const GaussQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussQ& operator-=(const GaussQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussQ& operator*=(const GaussQ& o);
  GaussQ operator-() const { return {-re, -im}; }

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(const GaussQ& a, const GaussQ& b) { return a * b.inverse(); }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }
};

std::string gauss_str(const GaussQ& g);

// Element of Q(i)[sqrt(pi), 1/sqrt(pi)]: finite sum of Gaussian rationals times
// integer powers of a formal symbol sqrt(pi). Terms are kept sorted by power and
// never hold a zero coefficient.
class ExactScalar {
 public:
  using Term = std::pair<int, GaussQ>;

  ExactScalar() = default;
  ExactScalar(long v);
  ExactScalar(const Rational& r);
  ExactScalar(const GaussQ& g);
  ExactScalar(const GaussQ& g, int sqrtpi_power);

  static ExactScalar i();
  static ExactScalar sqrtpi(int k = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_rational() const;
  bool is_gauss() const;  // no sqrt(pi) dependence
  const std::vector<Term>& terms() const { return terms_; }

  // Coefficient of sqrtpi^k.
  GaussQ coeff(int k) const;
  Rational to_rational() const;  // throws unless is_rational()
  GaussQ to_gauss() const;       // throws unless is_gauss()

  ExactScalar conj() const;
  ExactScalar operator-() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  // Substitute a rational value for sqrt(pi); a ring morphism into Q(i).
  GaussQ eval_at(const Rational& sqrtpi_value) const;
  std::complex<double> to_complex() const;

  // Round-trip text: "0" or terms "(re,im)*sqrtpi^k" joined by " + ".
  std::string str() const;
  static ExactScalar parse(const std::string& s);
  // Human-oriented rendering, e.g. "1/2*sqrt(pi) + 3*pi*i".
  std::string pretty() const;

 private:
  std::vector<Term> terms_;
  void add_term(int k, const GaussQ& g);
};

// Gamma at a positive half-integer.
ExactScalar gamma_half(const Rational& a);
// Gamma at any half-integer that is not a pole.
ExactScalar gamma_half_any(const Rational& a);
// Rising factorial a(a+1)...(a+k-1).
Rational pochhammer(const Rational& a, long k);
ExactScalar pochhammer(const ExactScalar& a, long k);
BigInt factorial(long n);
BigInt binomial(long n, long k);
// Generalized binomial coefficient C(a, k) for rational a.
Rational binomial_rational(const Rational& a, long k);

}  // namespace ospmin
