#pragma once

#include <string>
#include <vector>

#include "ospmin/liealg.hpp"

namespace ospmin {

// Fourier-conjugated representation pi^_lambda = F^- pi_{-lambda-2M} F^+:
//   e_k in J^-       -> d_k
//   L_kl             -> L_kl
//   L_e              -> -lambda/2 + E
//   \bar e_k in J^+  -> -x_k (2E - lambda) + R^2 d_k
class PiHat {
 public:
  PiHat(const TKK& tkk, const RepParams& rp, SpacePtr sp);

  const SpacePtr& space() const { return sp_; }
  const Rational& lambda() const { return rp_.lambda; }
  DiffOp plus_image(int k) const;  // image of \bar e_k
  DiffOp operator()(const TKKElement& x) const;
  const DiffOp& basis_image(int a) const;

 private:
  const TKK& tkk_;
  RepParams rp_;
  SpacePtr sp_;
  PiLambda pi_;
  DiffOp E_, R2_;
  mutable std::map<int, DiffOp> cache_;
};

// Symbol exchange x_k -> i d_k, d_k -> i x_k (d_k the lowered derivative),
// extended multiplicatively in operator order.
DiffOp fourier_conjugate(const DiffOp& D);

// -(p+q-4-2n) / (4(p+q-1-2n))
Rational mu_critical(const ModelParams& mp);

struct FourierCheck {
  std::string name;
  std::string indices;
  bool ok = false;
  std::string lhs, rhs;
};

// [Delta, pi^(\bar e_k)] = 2(lambda-2+M) d_k - 4 x_k Delta for every k, and the
// remaining generators map ker Delta into itself. "preserves" records whether
// every commutator lies in the left ideal generated by Delta.
struct KerDeltaReport {
  std::vector<FourierCheck> rows;
  bool preserves = false;
};
KerDeltaReport verify_ker_delta(const TKK& tkk, const Rational& lambda);

// adjoint(pi_lambda(X)) = -pi_{-lambda-2M}(X) and the same for pi^, on every
// TKK basis element.
std::vector<FourierCheck> verify_adjoint(const TKK& tkk, const Rational& lambda);

// F^- pi_{-lambda-2M}(X) F^+ = pi^_lambda(X) on every basis element, via the
// symbol exchange.
std::vector<FourierCheck> verify_fourier_table(const TKK& tkk, const Rational& lambda);

}  // namespace ospmin
