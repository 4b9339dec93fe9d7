#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ospmin/scalars.hpp"

namespace ospmin {

using GaussMatrix = std::vector<std::vector<GaussQ>>;

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(GaussMatrix& a);
int rank(GaussMatrix a);
// Basis of {v : A v = 0}.
std::vector<std::vector<GaussQ>> kernel(GaussMatrix a, int ncols);
// Some solution of A x = b, or nullopt.
std::optional<std::vector<GaussQ>> solve(const GaussMatrix& a, const std::vector<GaussQ>& b);

// Division-free determinant (Berkowitz); works over any commutative ring.
ExactScalar det_berkowitz(const std::vector<std::vector<ExactScalar>>& a);

// Sparse vectors keyed by arbitrary ordered keys.
template <class K>
using SparseVec = std::map<K, GaussQ>;

// Coefficients c with sum_k c_k basis[k] = target, or nullopt.
template <class K>
std::optional<std::vector<GaussQ>> solve_combination(const std::vector<SparseVec<K>>& basis,
                                                     const SparseVec<K>& target) {
  std::map<K, int> rows;
  for (auto& v : basis)
    for (auto& [k, c] : v) rows.emplace(k, 0);
  for (auto& [k, c] : target) rows.emplace(k, 0);
  int r = 0;
  for (auto& [k, idx] : rows) idx = r++;
  GaussMatrix a(r, std::vector<GaussQ>(basis.size()));
  std::vector<GaussQ> b(r);
  for (size_t j = 0; j < basis.size(); ++j)
    for (auto& [k, c] : basis[j]) a[rows[k]][j] = c;
  for (auto& [k, c] : target) b[rows[k]] = c;
  if (basis.empty()) {
    for (auto& v : b)
      if (!v.is_zero()) return std::nullopt;
    return std::vector<GaussQ>{};
  }
  return solve(a, b);
}

template <class K>
int sparse_rank(const std::vector<SparseVec<K>>& vecs) {
  std::map<K, int> cols;
  for (auto& v : vecs)
    for (auto& [k, c] : v) cols.emplace(k, 0);
  int n = 0;
  for (auto& [k, idx] : cols) idx = n++;
  GaussMatrix a(vecs.size(), std::vector<GaussQ>(n));
  for (size_t i = 0; i < vecs.size(); ++i)
    for (auto& [k, c] : vecs[i]) a[i][cols[k]] = c;
  return rank(std::move(a));
}

// Incremental sparse echelon form over Q(i). Vectors are added one at a time
// (index = insertion order); solve() expresses a target in the added vectors.
template <class K>
class EchelonSolver {
 public:
  // False if v depends on the vectors added before.
  bool add(const SparseVec<K>& v) {
    const int idx = count_++;
    SparseVec<K> u = v;
    std::map<int, GaussQ> comb;
    comb[idx] = 1;
    reduce(u, comb, true);
    if (u.empty()) return false;
    GaussQ inv = u.begin()->second.inverse();
    for (auto& [k, c] : u) c *= inv;
    for (auto& [i, c] : comb) c *= inv;
    K piv = u.begin()->first;
    rows_.emplace(piv, Row{std::move(u), std::move(comb)});
    return true;
  }

  std::optional<std::vector<GaussQ>> solve(const SparseVec<K>& target) const {
    SparseVec<K> u = target;
    std::map<int, GaussQ> comb;
    reduce(u, comb, false);
    if (!u.empty()) return std::nullopt;
    std::vector<GaussQ> x(count_);
    for (auto& [i, c] : comb) x[i] = c;
    return x;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int size() const { return count_; }

 private:
  struct Row {
    SparseVec<K> vec;
    std::map<int, GaussQ> comb;
  };
  std::map<K, Row> rows_;
  int count_ = 0;

  // u -= sum f_r row_r; comb tracks -sum f_r comb_r (negate = true) or +sum.
  void reduce(SparseVec<K>& u, std::map<int, GaussQ>& comb, bool negate) const {
    auto it = u.begin();
    while (it != u.end()) {
      auto r = rows_.find(it->first);
      if (r == rows_.end()) {
        ++it;
        continue;
      }
      const K key = it->first;
      const GaussQ f = it->second;
      for (auto& [k, c] : r->second.vec) {
        auto [pos, fresh] = u.try_emplace(k, GaussQ());
        pos->second -= f * c;
        if (pos->second.is_zero()) u.erase(pos);
      }
      for (auto& [i, c] : r->second.comb) {
        auto [pos, fresh] = comb.try_emplace(i, GaussQ());
        if (negate)
          pos->second -= f * c;
        else
          pos->second += f * c;
        if (pos->second.is_zero()) comb.erase(pos);
      }
      it = u.lower_bound(key);
    }
  }
};

}  // namespace ospmin
