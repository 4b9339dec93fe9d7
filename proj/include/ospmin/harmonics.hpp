#pragma once

#include <vector>

#include "ospmin/linalg.hpp"
#include "ospmin/superpoly.hpp"

namespace ospmin {

struct HarmonicBasis {
  int k = 0;
  std::vector<int> block;
  std::vector<SuperPoly> basis;
};

// Kernel of the block Laplacian on P_k(block), in reduced echelon form with
// respect to the graded-lex monomial order.
HarmonicBasis harmonic_basis(const SpacePtr& sp, const std::vector<int>& block, int k);

// dim H_k(R^{m|2n}) by the two binomial sums; m >= 1.
long dim_formula(int m, int twon, int k);
// dim P_k(R^{m|2n})
long dim_poly(int m, int twon, int k);

struct FischerReport {
  bool applicable = true;  // m - 2n not in -2N
  long dim_pk = 0;
  long sum_harmonic = 0;
  int span_rank = 0;
  bool ok = false;
};

// P_k = sum_j R^{2j} H_{k-2j}: dimension count and an exact spanning check.
FischerReport fischer_check(const SpacePtr& sp, const std::vector<int>& block, int k);

// phi^+_{k+1,i} and phi^-_{k-1,i} for a harmonic phi of degree k on the x/theta
// block or the y block of the model; the block is the one containing var.
SuperPoly raise_harmonic(const ModelParams& mp, const SuperPoly& phi, int k, int var);
SuperPoly lower_harmonic(const ModelParams& mp, const SuperPoly& phi, int k, int var);

// Coordinates of a polynomial on a harmonic basis (exact; throws if not in the span).
std::vector<GaussQ> harmonic_coords(const HarmonicBasis& hb, const SuperPoly& f);

}  // namespace ospmin
