#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ospmin/scalars.hpp"

namespace ospmin {

constexpr int kMaxVars = 24;

// Exponent vector; odd variables only ever carry exponent 0 or 1.
struct Mono {
  std::array<uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }
};

// Graded lexicographic order; variables earlier in the list are larger.
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

inline bool operator<(const Mono& a, const Mono& b) { return MonoLess()(a, b); }

struct Variable {
  std::string name;
  bool odd = false;
};

// A super vector space R^{m|2n} with coordinates and a supersymmetric even form.
class VarSpace {
 public:
  VarSpace(std::vector<Variable> vars, std::vector<std::vector<int>> beta);

  // Even variables with diagonal signs, followed by 2n odd variables with the
  // block form [[0, I_n], [-I_n, 0]].
  static std::shared_ptr<const VarSpace> standard(const std::vector<std::string>& even_names,
                                                  const std::vector<int>& even_signs,
                                                  const std::vector<std::string>& odd_names);

  int size() const { return static_cast<int>(vars_.size()); }
  bool odd(int i) const { return vars_[i].odd; }
  int parity(int i) const { return vars_[i].odd ? 1 : 0; }
  const std::string& name(int i) const { return vars_[i].name; }
  int index_of(const std::string& name) const;
  int even_count() const;
  int odd_count() const;
  int superdim() const { return even_count() - odd_count(); }

  int beta(int i, int j) const { return beta_[i][j]; }
  int beta_inv(int i, int j) const { return beta_inv_[i][j]; }
  const std::vector<std::pair<int, int>>& beta_row(int i) const { return beta_rows_[i]; }
  const std::vector<std::pair<int, int>>& beta_inv_row(int i) const { return beta_inv_rows_[i]; }
  uint32_t odd_mask() const { return odd_mask_; }

  int mono_parity(const Mono& m) const;
  // Sign of moving the odd factors of b to the right of those of a (a*b in
  // canonical order); 0 if an odd variable repeats.
  int product_sign(const Mono& a, const Mono& b) const;
  std::string mono_str(const Mono& m) const;

 private:
  std::vector<Variable> vars_;
  std::vector<std::vector<int>> beta_, beta_inv_;
  std::vector<std::vector<std::pair<int, int>>> beta_rows_, beta_inv_rows_;
  uint32_t odd_mask_ = 0;
};

using SpacePtr = std::shared_ptr<const VarSpace>;

struct ModelParams {
  int p = 2, q = 2, n = 0;

  ModelParams() = default;
  ModelParams(int p_, int q_, int n_);

  int m() const { return p + q - 2; }
  int M() const { return p + q - 2 - 2 * n; }
  int mu() const { return std::max(p - 2 * n - 3, q - 3); }
  int nu() const { return std::min(p - 2 * n - 3, q - 3); }
  // p - 2n >= q: the x/theta block carries mu.
  bool split() const { return p - 2 * n >= q; }
  std::string str() const;

  int x(int i) const { return i - 1; }          // x_i, i = 1..p-1
  int y(int i) const { return p - 1 + i - 1; }  // y_i, i = 1..q-1
  int theta(int i) const { return p + q - 2 + i - 1; }  // theta_i, i = 1..2n
  int nvars() const { return p + q - 2 + 2 * n; }
  std::vector<int> x_vars() const;
  std::vector<int> y_vars() const;
  std::vector<int> theta_vars() const;
  // Variables of the blocks R^{mu+2} and R^{nu+2}.
  std::vector<int> mu_block() const;
  std::vector<int> nu_block() const;
};

// The coordinate space R^{p-1, q-1 | 2n} of the model.
SpacePtr model_space(const ModelParams& mp);

class SuperPoly {
 public:
  using Terms = std::map<Mono, ExactScalar, MonoLess>;

  SuperPoly() = default;
  explicit SuperPoly(SpacePtr sp) : sp_(std::move(sp)) {}
  SuperPoly(SpacePtr sp, const ExactScalar& c);

  static SuperPoly var(SpacePtr sp, int i);
  static SuperPoly monomial(SpacePtr sp, const Mono& m, const ExactScalar& c = ExactScalar(1));

  const SpacePtr& space() const { return sp_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  ExactScalar coeff(const Mono& m) const;
  void add_term(const Mono& m, const ExactScalar& c);

  // -1 if inhomogeneous or zero-free mixture; 0/1 parity otherwise (zero is even).
  int parity() const;
  SuperPoly even_part() const;
  SuperPoly odd_part() const;
  // Homogeneous component of total degree d.
  SuperPoly degree_part(int d) const;
  int max_degree() const;

  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const ExactScalar& c);
  SuperPoly operator-() const;
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(SuperPoly a, const ExactScalar& c) { return a *= c; }
  friend SuperPoly operator*(const ExactScalar& c, SuperPoly a) { return a *= c; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  friend bool operator==(const SuperPoly& a, const SuperPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

  SuperPoly conj() const;
  std::string str() const;

 private:
  SpacePtr sp_;
  Terms terms_;
};

void check_same_space(const SpacePtr& a, const SpacePtr& b);

// Plain derivative d/dx_i (the derivation with d^i(x_j) = delta_ij).
SuperPoly partial(int i, const SuperPoly& f);
// Lowered derivative d_j = sum_i d^i beta_{ji}; satisfies d_i(x^j) = delta_ij.
SuperPoly partial_lower(int j, const SuperPoly& f);
// x^j = sum_i x_i beta^{ij}
SuperPoly raised_var(const SpacePtr& sp, int j);

SuperPoly r_squared(const SpacePtr& sp);
SuperPoly euler(const SuperPoly& f);
SuperPoly laplacian(const SuperPoly& f);
// Restricted to a subset of variables (block operators).
SuperPoly r_squared_block(const SpacePtr& sp, const std::vector<int>& block);
SuperPoly laplacian_block(const SuperPoly& f, const std::vector<int>& block);
SuperPoly euler_block(const SuperPoly& f, const std::vector<int>& block);

// Canonical representative modulo <R^2>: rewrites y_{q-1}^2.
SuperPoly reduce_mod_r2(const ModelParams& mp, const SuperPoly& f);

// All monomials of total degree d in the given variables (odd exponents <= 1).
std::vector<Mono> monomials_of_degree(const SpacePtr& sp, const std::vector<int>& vars, int d);

}  // namespace ospmin
