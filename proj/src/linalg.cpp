#include "ospmin/linalg.hpp"

namespace ospmin {

std::vector<int> rref(GaussMatrix& a) {
  std::vector<int> piv;
  if (a.empty()) return piv;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    GaussQ inv = a[r][c].inverse();
    for (int k = c; k < cols; ++k)
      if (!a[r][k].is_zero()) a[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      GaussQ f = a[i][c];
      for (int k = c; k < cols; ++k)
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(GaussMatrix a) { return static_cast<int>(rref(a).size()); }

std::vector<std::vector<GaussQ>> kernel(GaussMatrix a, int ncols) {
  std::vector<int> piv = rref(a);
  std::vector<bool> is_piv(ncols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<GaussQ>> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<GaussQ> v(ncols);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<GaussQ>> solve(const GaussMatrix& a, const std::vector<GaussQ>& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  GaussMatrix aug(rows, std::vector<GaussQ>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  std::vector<GaussQ> x(cols);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

ExactScalar det_berkowitz(const std::vector<std::vector<ExactScalar>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return ExactScalar(1);
  // Characteristic polynomial coefficients via Berkowitz' Toeplitz products.
  std::vector<ExactScalar> poly = {ExactScalar(1), -a[0][0]};
  for (int k = 1; k < n; ++k) {
    // Submatrix blocks of the leading (k+1)x(k+1) principal minor.
    std::vector<ExactScalar> R(a[k].begin(), a[k].begin() + k);
    std::vector<ExactScalar> C(k);
    for (int i = 0; i < k; ++i) C[i] = a[i][k];
    const ExactScalar& d = a[k][k];
    // Toeplitz column t = [1, -d, -R C, -R A C, ..., -R A^{k-1} C]
    std::vector<ExactScalar> t(k + 2);
    t[0] = ExactScalar(1);
    t[1] = -d;
    std::vector<ExactScalar> v = C;
    for (int j = 0; j < k; ++j) {
      ExactScalar s;
      for (int i = 0; i < k; ++i) s += R[i] * v[i];
      t[j + 2] = -s;
      std::vector<ExactScalar> w(k);
      for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l)
          if (!a[i][l].is_zero() && !v[l].is_zero()) w[i] += a[i][l] * v[l];
      v = std::move(w);
    }
    std::vector<ExactScalar> np(k + 2);
    for (int i = 0; i < k + 2; ++i)
      for (int j = 0; j <= i && j < static_cast<int>(poly.size()); ++j) np[i] += t[i - j] * poly[j];
    poly = std::move(np);
  }
  ExactScalar det = poly[n];
  return (n % 2) ? -det : det;
}

}  // namespace ospmin
