#include "ospmin/scalars.hpp"

#include <cmath>
#include <sstream>

namespace ospmin {

Rational rat(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

GaussQ GaussQ::inverse() const {
  Rational n = re * re + im * im;
  if (sgn(n) == 0) throw DomainError("division by zero Gaussian rational");
  return {re / n, -im / n};
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string gauss_str(const GaussQ& g) { return "(" + rat_str(g.re) + "," + rat_str(g.im) + ")"; }

ExactScalar::ExactScalar(long v) {
  if (v != 0) terms_.emplace_back(0, GaussQ(v));
}
ExactScalar::ExactScalar(const Rational& r) {
  if (sgn(r) != 0) terms_.emplace_back(0, GaussQ(r));
}
ExactScalar::ExactScalar(const GaussQ& g) {
  if (!g.is_zero()) terms_.emplace_back(0, g);
}
ExactScalar::ExactScalar(const GaussQ& g, int k) {
  if (!g.is_zero()) terms_.emplace_back(k, g);
}

ExactScalar ExactScalar::i() { return ExactScalar(GaussQ(Rational(0), Rational(1))); }
ExactScalar ExactScalar::sqrtpi(int k) { return ExactScalar(GaussQ(1), k); }

bool ExactScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_real());
}
bool ExactScalar::is_gauss() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

GaussQ ExactScalar::coeff(int k) const {
  for (auto& [p, g] : terms_)
    if (p == k) return g;
  return GaussQ();
}

Rational ExactScalar::to_rational() const {
  if (!is_rational()) throw DomainError("scalar is not rational: " + str());
  return terms_.empty() ? Rational(0) : terms_[0].second.re;
}
GaussQ ExactScalar::to_gauss() const {
  if (!is_gauss()) throw DomainError("scalar depends on sqrt(pi): " + str());
  return terms_.empty() ? GaussQ() : terms_[0].second;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar r = *this;
  for (auto& t : r.terms_) t.second.im = -t.second.im;
  return r;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

void ExactScalar::add_term(int k, const GaussQ& g) {
  if (g.is_zero()) return;
  auto it = terms_.begin();
  while (it != terms_.end() && it->first < k) ++it;
  if (it != terms_.end() && it->first == k) {
    it->second += g;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term(k, g));
  }
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (terms_.empty()) return *this = o;
  for (auto& [k, g] : o.terms_) add_term(k, g);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  for (auto& [k, g] : o.terms_) add_term(k, -g);
  return *this;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    r.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
    return r;
  }
  for (auto& [ka, ga] : a.terms_)
    for (auto& [kb, gb] : b.terms_) r.add_term(ka + kb, ga * gb);
  return r;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) { return *this = *this * o; }

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.terms_.size() != 1) throw DomainError("division by a non-monomial scalar: " + o.str());
  GaussQ inv = o.terms_[0].second.inverse();
  int k = o.terms_[0].first;
  for (auto& t : terms_) {
    t.first -= k;
    t.second *= inv;
  }
  return *this;
}

GaussQ ExactScalar::eval_at(const Rational& v) const {
  GaussQ r;
  for (auto& [k, g] : terms_) {
    Rational pw = 1;
    Rational base = k >= 0 ? v : Rational(1) / v;
    for (int e = 0; e < std::abs(k); ++e) pw *= base;
    r += g * GaussQ(pw);
  }
  return r;
}

std::complex<double> ExactScalar::to_complex() const {
  std::complex<double> r = 0;
  const double sp = std::sqrt(M_PI);
  for (auto& [k, g] : terms_) r += std::complex<double>(g.re.get_d(), g.im.get_d()) * std::pow(sp, k);
  return r;
}

std::string ExactScalar::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t t = 0; t < terms_.size(); ++t) {
    if (t) s += " + ";
    s += gauss_str(terms_[t].second) + "*sqrtpi^" + std::to_string(terms_[t].first);
  }
  return s;
}

ExactScalar ExactScalar::parse(const std::string& text) {
  ExactScalar r;
  std::string s = text;
  auto trim = [](std::string v) {
    size_t a = v.find_first_not_of(' ');
    size_t b = v.find_last_not_of(' ');
    return a == std::string::npos ? std::string() : v.substr(a, b - a + 1);
  };
  s = trim(s);
  if (s == "0") return r;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(" + ", pos);
    std::string term = trim(s.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
    pos = end == std::string::npos ? s.size() : end + 3;
    if (term.size() < 5 || term[0] != '(') throw std::invalid_argument("bad scalar term: " + term);
    size_t comma = term.find(',');
    size_t close = term.find(')');
    size_t caret = term.find("*sqrtpi^");
    if (comma == std::string::npos || close == std::string::npos || caret == std::string::npos || !(comma < close))
      throw std::invalid_argument("bad scalar term: " + term);
    Rational re = parse_rational(term.substr(1, comma - 1));
    Rational im = parse_rational(term.substr(comma + 1, close - comma - 1));
    int k = std::stoi(term.substr(caret + 8));
    r.add_term(k, GaussQ(re, im));
  }
  return r;
}

std::string ExactScalar::pretty() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t t = 0; t < terms_.size(); ++t) {
    auto& [k, g] = terms_[t];
    std::string c;
    if (g.is_real())
      c = rat_str(g.re);
    else if (sgn(g.re) == 0)
      c = rat_str(g.im) + "i";
    else
      c = "(" + rat_str(g.re) + (sgn(g.im) > 0 ? "+" : "") + rat_str(g.im) + "i)";
    std::string sym;
    if (k == 1)
      sym = "sqrt(pi)";
    else if (k == 2)
      sym = "pi";
    else if (k != 0 && k % 2 == 0)
      sym = "pi^" + std::to_string(k / 2);
    else if (k != 0)
      sym = "sqrt(pi)^" + std::to_string(k);
    if (t) s += " + ";
    s += sym.empty() ? c : c + "*" + sym;
  }
  return s;
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational binomial_rational(const Rational& a, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= (a - i);
  r /= Rational(factorial(k));
  return r;
}

ExactScalar gamma_half(const Rational& a) {
  Rational two_a = 2 * a;
  if (two_a.get_den() != 1 || sgn(a) <= 0)
    throw DomainError("gamma_half needs a positive half-integer, got " + rat_str(a));
  if (a.get_den() == 1) {
    long n = a.get_num().get_si();
    return ExactScalar(Rational(factorial(n - 1)));
  }
  long k = (two_a.get_num().get_si() - 1) / 2;  // a = k + 1/2
  BigInt num = factorial(2 * k);
  BigInt den = factorial(k);
  den <<= static_cast<mp_bitcnt_t>(2 * k);
  Rational c(num, den);
  c.canonicalize();
  return ExactScalar(GaussQ(c), 1);
}

ExactScalar gamma_half_any(const Rational& a) {
  if (sgn(a) > 0) return gamma_half(a);
  if (a.get_den() == 1) throw DomainError("Gamma has a pole at " + rat_str(a));
  return gamma_half_any(a + 1) / ExactScalar(a);
}

Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw DomainError("pochhammer with negative length");
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= (a + i);
  return r;
}

ExactScalar pochhammer(const ExactScalar& a, long k) {
  if (k < 0) throw DomainError("pochhammer with negative length");
  ExactScalar r(1);
  for (long i = 0; i < k; ++i) r *= (a + ExactScalar(i));
  return r;
}

}  // namespace ospmin
