#pragma once

#include <map>
#include <string>
#include <vector>

#include "ospmin/superpoly.hpp"

namespace ospmin {

// Polynomial differential operator in normal order: sum_b c_b(x) d^b, with the
// coefficient on the left and d^b = d^{i_1}...d^{i_k} (i_1 <= ... <= i_k) a
// monomial in the plain derivatives.
class DiffOp {
 public:
  using Terms = std::map<Mono, SuperPoly, MonoLess>;

  DiffOp() = default;
  explicit DiffOp(SpacePtr sp) : sp_(std::move(sp)) {}

  static DiffOp scalar(SpacePtr sp, const ExactScalar& c);
  static DiffOp mult(const SuperPoly& f);
  static DiffOp d(SpacePtr sp, int i);        // plain derivative d^i
  static DiffOp d_lower(SpacePtr sp, int j);  // d_j = sum_i d^i beta_{ji}
  static DiffOp term(const SuperPoly& c, const Mono& derivs);

  const SpacePtr& space() const { return sp_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;
  // 0/1, or -1 if inhomogeneous
  int parity() const;
  DiffOp even_part() const;
  DiffOp odd_part() const;

  void add_term(const Mono& derivs, const SuperPoly& c);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const ExactScalar& c);
  DiffOp operator-() const;
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const ExactScalar& c) { return a *= c; }
  friend DiffOp operator*(const ExactScalar& c, DiffOp a) { return a *= c; }
  // composition
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  SuperPoly apply(const SuperPoly& f) const;
  std::string str() const;

 private:
  SpacePtr sp_;
  Terms terms_;
};

// Left multiplication by a polynomial: f * D.
DiffOp operator*(const SuperPoly& f, const DiffOp& D);

// d^i o D, kept in normal order.
DiffOp d_compose(int i, const DiffOp& D);

// [A,B] = AB - (-1)^{|A||B|} BA, extended bilinearly over parity components.
DiffOp supercommutator(const DiffOp& a, const DiffOp& b);

// Conjugate-linear formal transpose: x^t = x, (d^i)^t = -d^i,
// (AB)^t = (-1)^{|A||B|} B^t A^t, scalars conjugated.
DiffOp formal_adjoint(const DiffOp& D);

DiffOp r2_op(const SpacePtr& sp);
DiffOp euler_op(const SpacePtr& sp);
DiffOp laplace_op(const SpacePtr& sp);
DiffOp r2_op(const SpacePtr& sp, const std::vector<int>& block);
DiffOp euler_op(const SpacePtr& sp, const std::vector<int>& block);
DiffOp laplace_op(const SpacePtr& sp, const std::vector<int>& block);

// L_{ij} = x_i d_j - (-1)^{|i||j|} x_j d_i (i < j), L_{ii} = 2 x_i d_i for odd i.
DiffOp L_op(const SpacePtr& sp, int i, int j);
// All L_{ij} with i <= j (i == j only for odd i), in a fixed order.
std::vector<std::pair<std::pair<int, int>, DiffOp>> osp_basis(const SpacePtr& sp);

}  // namespace ospmin
