// One PASS/FAIL line per acceptance criterion, on the default triples and caps.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ospmin/suites.hpp"

using namespace ospmin;

namespace {

static_assert(kNumericTolerance == 1e-8);

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double limit;    // seconds, 0 = none
  bool per_triple;  // limit applies per triple, else to the sum
  std::vector<ModelParams> triples;  // empty = all default triples
};

const std::vector<ModelParams> kTriples = {ModelParams(4, 4, 1), ModelParams(6, 4, 1), ModelParams(3, 5, 0)};
const ModelParams k441(4, 4, 1);

const std::vector<Criterion> kCriteria = {
    {1, "sl(2) triple and osp invariance", "algebra", 5, false, {}},
    {2, "Jordan identity, super-Jacobi, TKK isomorphism", "algebra", 30, false, {}},
    {3, "pi_lambda homomorphism at lambda in {2-M, 0, 1}", "representation", 60, true, {}},
    {4, "tangentiality iff lambda = 2-M", "representation", 0, false, {}},
    {5, "harmonic dimensions and Fischer decomposition", "harmonics", 0, false, {}},
    {6, "Laguerre identities, shifted parameters", "laguerre", 0, false, {}},
    {7, "Laguerre numeric oracle", "laguerre", 5, false, {}},
    {8, "Bessel operator action and L_e on W", "wmodule", 600, true, {}},
    {9, "dim W_j and the intertwiner", "wmodule", 0, false, {}},
    {10, "Gelfand-Kirillov dimension p+q-3", "gkdim", 5, false, {}},
    {11, "integral of K~_{nu/2}^2 and the Sigma sum", "functional", 0, false, {}},
    {12, "orbit integral properties", "functional", 0, false, {}},
    {13, "skew-symmetry j <= 1 and Gram determinant on W_0", "functional", 900, false, {k441}},
    {14, "Fourier-conjugated representation and adjoints", "fourier", 60, false, {}},
    {15, "radial moment closed form vs quadrature", "functional", 0, false, {}},
};

bool in(const std::vector<ModelParams>& v, const ModelParams& t) {
  for (auto& x : v)
    if (x.p == t.p && x.q == t.q && x.n == t.n) return true;
  return false;
}

}  // namespace

int main() {
  SuiteOptions opt;  // degree 5, j_max 2, seed 1
  std::map<std::string, std::vector<SuiteReport>> by_suite;
  std::vector<SuiteTask> tasks;
  for (auto& s : suite_names())
    for (auto& t : kTriples) tasks.push_back({s, t});
  for (auto& r : run_suites(tasks, opt, 1)) by_suite[r.suite].push_back(std::move(r));

  int failed = 0;
  for (auto& c : kCriteria) {
    const std::vector<ModelParams>& triples = c.triples.empty() ? kTriples : c.triples;
    long pass = 0, fail = 0, skip = 0;
    double total = 0, worst = 0;
    const Check* first_fail = nullptr;
    const SuiteReport* fail_rep = nullptr;
    for (auto& r : by_suite[c.suite]) {
      if (!in(triples, r.triple)) continue;
      auto it = r.criterion_seconds.find(c.id);
      const double t = it == r.criterion_seconds.end() ? 0 : it->second;
      total += t;
      worst = std::max(worst, t);
      for (auto& k : r.checks) {
        // exceptions abort a whole suite; count them against every criterion in it
        if (k.criterion != c.id && !(k.criterion == 0 && k.status == Status::Fail)) continue;
        if (k.status == Status::Pass) ++pass;
        else if (k.status == Status::Skipped) ++skip;
        else {
          ++fail;
          if (!first_fail) first_fail = &k, fail_rep = &r;
        }
      }
    }
    const double timed = c.per_triple ? worst : total;
    const bool slow = c.limit > 0 && timed > c.limit;
    const bool ok = fail == 0 && pass > 0 && !slow;
    failed += !ok;
    std::printf("criterion %2d: %s  %s  [%ld pass, %ld fail, %ld skipped, %.1f s", c.id, ok ? "PASS" : "FAIL",
                c.title, pass, fail, skip, timed);
    if (c.limit > 0) std::printf(" / limit %.0f s%s", c.limit, c.per_triple ? " per triple" : "");
    std::printf("]\n");
    if (slow) std::printf("    over the time limit\n");
    if (first_fail)
      std::printf("    first failure: %s %s [%s]\n      lhs: %.300s\n      rhs: %.300s\n", fail_rep->triple.str().c_str(),
                  first_fail->name.c_str(), first_fail->indices.c_str(), first_fail->lhs.c_str(),
                  first_fail->rhs.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  return failed ? 1 : 0;
}
