#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ospmin/linalg.hpp"
#include "ospmin/operators.hpp"

namespace ospmin {

using JVec = std::vector<GaussQ>;

// Spin factor Jordan superalgebra J = R e + V, dim V = (p+q-3|2n). Index 0 is
// the unit; 1..p-1 carry +1, p..p+q-3 carry -1, the rest are odd with the
// symplectic block form.
class JordanSpin {
 public:
  explicit JordanSpin(const ModelParams& mp);

  const ModelParams& params() const { return mp_; }
  int dim() const { return dim_; }
  int parity(int i) const { return parity_[i]; }
  // Extended form beta on J (beta_00 = -1), and the reduced form on V.
  int beta(int i, int j) const { return beta_[i][j]; }
  // Model-space variable carrying the coordinate of e_k.
  int jvar(int k) const;

  JVec unit_vec(int k) const;
  JVec mul(const JVec& a, const JVec& b) const;
  GaussMatrix L(const JVec& a) const;
  GaussMatrix L(int k) const { return L(unit_vec(k)); }
  // Supercommutator of two matrices on J, split into parity components.
  GaussMatrix matrix_bracket(const GaussMatrix& a, const GaussMatrix& b) const;
  int matrix_parity(const GaussMatrix& a) const;  // -1 if inhomogeneous
  GaussMatrix matrix_part(const GaussMatrix& a, int parity) const;
  JVec apply(const GaussMatrix& a, const JVec& v) const;

  // <X u, v> + (-1)^{|X||u|} <u, X v> = 0 for all basis u, v
  bool preserves_form(const GaussMatrix& x) const;
  // Graded Jordan identity in L-operator form on basis vectors.
  bool jordan_identity(int i, int j, int k) const;

 private:
  ModelParams mp_;
  int dim_;
  std::vector<int> parity_;
  std::vector<std::vector<int>> beta_;
};

struct TKKElement {
  JVec plus;          // element of J^+ in the e-basis
  GaussMatrix istr;   // element of istr(J) as a matrix on J
  JVec minus;         // element of J^-
};

// TKK(J) = J^+ + istr(J) + J^- with structure constants generated from the
// Jordan product. Basis order: Eplus(k) = \bar e_k, istr basis, Eminus(k).
class TKK {
 public:
  explicit TKK(const ModelParams& mp);

  const JordanSpin& jordan() const { return J_; }
  const ModelParams& params() const { return J_.params(); }
  int dim() const { return static_cast<int>(names_.size()); }
  int dim_plus() const { return J_.dim(); }
  int dim_istr() const { return static_cast<int>(istr_basis_.size()); }
  const std::string& name(int a) const { return names_[a]; }
  int parity(int a) const { return parity_[a]; }
  // 0: J^+, 1: istr, 2: J^-
  int grade(int a) const;
  // For istr basis elements: (0, i) means L_{e_i} (i = 0 is L_e), (i, j) with
  // i, j > 0 means [L_{e_i}, L_{e_j}].
  std::pair<int, int> istr_label(int a) const { return istr_labels_[a - dim_plus()]; }

  TKKElement zero() const;
  TKKElement basis(int a) const;
  TKKElement bracket(const TKKElement& x, const TKKElement& y) const;
  std::vector<GaussQ> coords(const TKKElement& x) const;
  TKKElement from_coords(const std::vector<GaussQ>& c) const;
  bool equal(const TKKElement& a, const TKKElement& b) const;

  // Sparse structure constants of [basis a, basis b].
  const std::map<int, GaussQ>& structure(int a, int b) const;

 private:
  JordanSpin J_;
  std::vector<GaussMatrix> istr_basis_;
  std::vector<std::pair<int, int>> istr_labels_;
  std::vector<std::string> names_;
  std::vector<int> parity_;
  // Coordinates of istr matrices: pivot entries and the inverse of the pivot block.
  std::vector<std::pair<int, int>> pivots_;
  GaussMatrix pivot_inverse_;
  mutable std::map<std::pair<int, int>, std::map<int, GaussQ>> structure_cache_;

  TKKElement bracket_homogeneous(const TKKElement& x, int gx, int px, const TKKElement& y, int gy, int py) const;
  GaussMatrix rho_minus(const GaussMatrix& t) const;
};

struct RepParams {
  Rational lambda;
};

// The representation pi_lambda on the model space R^{p-1,q-1|2n}.
class PiLambda {
 public:
  PiLambda(const TKK& tkk, const RepParams& rp);
  PiLambda(const TKK& tkk, const RepParams& rp, SpacePtr sp);

  const SpacePtr& space() const { return sp_; }
  const ModelParams& params() const { return tkk_.params(); }
  const Rational& lambda() const { return rp_.lambda; }
  DiffOp bessel(int k) const;  // B_lambda(e_k)
  DiffOp operator()(const TKKElement& x) const;
  const DiffOp& basis_image(int a) const;

 private:
  const TKK& tkk_;
  RepParams rp_;
  SpacePtr sp_;
  DiffOp E_, Delta_;
  mutable std::map<int, DiffOp> cache_;
};

DiffOp bessel_operator(const SpacePtr& sp, int var, const Rational& lambda);

// pi_C(X) f: pi_{2-M}(X) applied to a representative, then reduced mod R^2.
SuperPoly pi_c(const PiLambda& pi, const TKKElement& x, const SuperPoly& f);

// Realisation of osp(p,q|2n) by L_{ij} on R^{p,q|2n}; layout: 0 (+1), the even
// V indices, e_0 (-1), an extra -1, then the odd indices.
class OspIso {
 public:
  explicit OspIso(const TKK& tkk);
  const SpacePtr& space() const { return sp_; }
  int tilde(int jordan_index) const;
  int extra_plus() const { return 0; }
  int extra_minus() const;
  DiffOp basis_image(int a) const;
  DiffOp operator()(const TKKElement& x) const;

 private:
  const TKK& tkk_;
  SpacePtr sp_;
  std::vector<DiffOp> images_;
};

}  // namespace ospmin
