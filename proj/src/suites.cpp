#include "ospmin/suites.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "ospmin/fourier.hpp"
#include "ospmin/harmonics.hpp"
#include "ospmin/liealg.hpp"
#include "ospmin/minrep.hpp"
#include "ospmin/orbitfunc.hpp"
#include "ospmin/radial.hpp"

namespace ospmin {

const char* status_str(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    default: return "SKIPPED";
  }
}

bool SuiteReport::failed() const {
  for (auto& c : checks)
    if (c.status == Status::Fail) return true;
  return false;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "representation", "harmonics", "laguerre",
                                                 "wmodule", "functional",     "fourier",   "gkdim"};
  return names;
}

bool is_suite(const std::string& name) {
  for (auto& s : suite_names())
    if (s == name) return true;
  return false;
}

namespace {

constexpr double kNumericTol = kNumericTolerance;

struct Out {
  std::vector<Check>& rows;
  std::map<int, double>& seconds;
  int current = 0;
  std::chrono::steady_clock::time_point since = std::chrono::steady_clock::now();
  // charge the time since the last call to the running section, then start `crit`
  void section(int crit) {
    auto now = std::chrono::steady_clock::now();
    if (current) seconds[current] += std::chrono::duration<double>(now - since).count();
    current = crit;
    since = now;
  }
  void add(int crit, std::string ref, std::string name, std::string idx, bool ok, std::string lhs = "",
           std::string rhs = "") {
    rows.push_back({std::move(name), std::move(idx), ok ? Status::Pass : Status::Fail, std::move(lhs), std::move(rhs),
                    std::move(ref), crit});
  }
  void skip(int crit, std::string ref, std::string name, std::string why) {
    rows.push_back({std::move(name), "", Status::Skipped, "", why, std::move(ref), crit});
  }
  // structural identity: the text of both sides only when they differ
  template <class T>
  void same(int crit, std::string ref, std::string name, std::string idx, const T& lhs, const T& rhs) {
    const bool ok = lhs == rhs;
    add(crit, std::move(ref), std::move(name), std::move(idx), ok, ok ? "" : lhs.str(), ok ? "" : rhs.str());
  }
};

std::string num(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

std::string lam_str(const Rational& l) { return "lambda=" + rat_str(l); }

std::vector<Rational> test_lambdas(const ModelParams& mp) {
  return {Rational(2 - mp.M()), Rational(0), Rational(1)};
}

// Why W cannot be built for this triple, or empty.
std::string w_hypothesis(const ModelParams& mp) {
  if ((mp.p + mp.q) % 2) return "p+q even";
  if (mp.nu() <= 0 && mp.nu() % 2 == 0) return "nu not in -2N";
  return "";
}

std::vector<int> xtheta_block(const ModelParams& mp) {
  std::vector<int> b = mp.x_vars();
  for (int v : mp.theta_vars()) b.push_back(v);
  return b;
}

// ---- suites

void algebra(const ModelParams& mp, const SuiteOptions&, Out& out) {
  const std::string r1 = "sl(2) relations and osp invariance";
  out.section(1);
  SpacePtr sp = model_space(mp);
  DiffOp D = laplace_op(sp), R = r2_op(sp), E = euler_op(sp);
  out.same(1, r1, "delta_r2", "", supercommutator(D, R), E * ExactScalar(4) + DiffOp::scalar(sp, ExactScalar(2 * mp.M())));
  out.same(1, r1, "delta_euler", "", supercommutator(D, E), D * ExactScalar(2));
  out.same(1, r1, "r2_euler", "", supercommutator(R, E), R * ExactScalar(-2));
  for (auto& [ij, L] : osp_basis(sp)) {
    const std::string idx = "L(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")";
    const bool ok = supercommutator(L, D).is_zero() && supercommutator(L, R).is_zero() &&
                    supercommutator(L, E).is_zero();
    out.add(1, r1, "osp_invariance", idx, ok);
  }

  const std::string r2 = "Jordan superalgebra and TKK construction";
  out.section(2);
  TKK tkk(mp);
  const JordanSpin& J = tkk.jordan();
  long bad = 0, total = 0;
  std::string first_bad;
  for (int i = 0; i < J.dim(); ++i)
    for (int j = 0; j < J.dim(); ++j)
      for (int k = 0; k < J.dim(); ++k) {
        ++total;
        if (!J.jordan_identity(i, j, k)) {
          if (!bad++) first_bad = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
        }
      }
  out.add(2, r2, "jordan_identity", std::to_string(total) + " basis triples", bad == 0, std::to_string(bad) + " failing",
          first_bad);

  // super-Jacobi from the structure constants, one row per first index
  auto apply = [&](int a, const std::map<int, GaussQ>& v) {
    std::map<int, GaussQ> r;
    for (auto& [d, c] : v)
      for (auto& [e, c2] : tkk.structure(a, d)) r[e] += c * c2;
    return r;
  };
  auto clean = [](std::map<int, GaussQ> m) {
    for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
    return m;
  };
  for (int a = 0; a < tkk.dim(); ++a) {
    long fails = 0;
    std::string where;
    for (int b = 0; b < tkk.dim(); ++b)
      for (int c = 0; c < tkk.dim(); ++c) {
        std::map<int, GaussQ> lhs = apply(a, tkk.structure(b, c));
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        std::map<int, GaussQ> ab_c;
        for (auto& [d, k] : tkk.structure(a, b))
          for (auto& [e, k2] : tkk.structure(d, c)) ab_c[e] += k * k2;
        std::map<int, GaussQ> b_ac = apply(b, tkk.structure(a, c));
        const GaussQ s = (tkk.parity(a) && tkk.parity(b)) ? GaussQ(-1) : GaussQ(1);
        std::map<int, GaussQ> rhs = ab_c;
        for (auto& [e, k] : b_ac) rhs[e] += s * k;
        if (clean(lhs) != clean(rhs)) {
          if (!fails++) where = tkk.name(b) + "," + tkk.name(c);
        }
      }
    out.add(2, r2, "super_jacobi", tkk.name(a), fails == 0, fails ? std::to_string(fails) + " failing" : "", where);
  }

  OspIso iso(tkk);
  for (int a = 0; a < tkk.dim(); ++a) {
    long fails = 0;
    std::string where;
    for (int b = 0; b < tkk.dim(); ++b) {
      DiffOp lhs = iso(tkk.bracket(tkk.basis(a), tkk.basis(b)));
      DiffOp rhs = supercommutator(iso.basis_image(a), iso.basis_image(b));
      if (lhs != rhs && !fails++) where = tkk.name(b);
    }
    out.add(2, r2, "osp_isomorphism", tkk.name(a), fails == 0, fails ? std::to_string(fails) + " failing" : "", where);
  }
}

void representation(const ModelParams& mp, const SuiteOptions&, Out& out) {
  out.section(3);
  TKK tkk(mp);
  SpacePtr sp = model_space(mp);
  const std::string r3 = "pi_lambda is a representation";
  for (const Rational& lam : test_lambdas(mp)) {
    PiLambda pi(tkk, {lam}, sp);
    for (int a = 0; a < tkk.dim(); ++a) {
      long fails = 0;
      std::string where;
      for (int b = a; b < tkk.dim(); ++b) {
        DiffOp lhs = pi(tkk.bracket(tkk.basis(a), tkk.basis(b)));
        DiffOp rhs = supercommutator(pi.basis_image(a), pi.basis_image(b));
        if (lhs != rhs && !fails++) where = tkk.name(b);
      }
      out.add(3, r3, "homomorphism", lam_str(lam) + " " + tkk.name(a), fails == 0,
              fails ? std::to_string(fails) + " failing" : "", where);
    }
  }

  const std::string r4 = "Bessel operators tangential to R^2 = 0";
  out.section(4);
  const Rational crit = 2 - mp.M();
  const DiffOp R = r2_op(sp);
  for (const Rational& lam : std::vector<Rational>{crit, crit - 1, crit + 1}) {
    PiLambda pi(tkk, {lam}, sp);
    for (int k = 0; k < tkk.jordan().dim(); ++k) {
      DiffOp c = supercommutator(pi.bessel(k), R), residue(sp);
      for (auto& [b, coef] : c.terms()) residue.add_term(b, reduce_mod_r2(mp, coef));
      const bool expect_zero = lam == crit;
      out.add(4, r4, "tangential_residue", lam_str(lam) + " k=" + std::to_string(k),
              residue.is_zero() == expect_zero, residue.is_zero() ? "0" : residue.str(),
              expect_zero ? "0" : "nonzero");
    }
  }
}

void harmonics(const ModelParams& mp, const SuiteOptions& opt, Out& out) {
  const std::string r5 = "spherical harmonics";
  out.section(5);
  SpacePtr sp = model_space(mp);
  struct Block {
    std::string name;
    std::vector<int> vars;
    int m, twon;
  };
  std::vector<Block> blocks = {{"x_theta", xtheta_block(mp), mp.p - 1, 2 * mp.n}, {"y", mp.y_vars(), mp.q - 1, 0}};
  for (auto& b : blocks) {
    for (int k = 0; k <= opt.max_degree + 1; ++k) {
      const long rank = static_cast<long>(harmonic_basis(sp, b.vars, k).basis.size());
      const long formula = dim_formula(b.m, b.twon, k);
      out.add(5, r5, "dim_formula", b.name + " k=" + std::to_string(k), rank == formula, std::to_string(rank),
              std::to_string(formula));
    }
    for (int k = 0; k <= opt.max_degree - 1; ++k) {
      FischerReport f = fischer_check(sp, b.vars, k);
      if (!f.applicable) {
        out.skip(5, r5, "fischer " + b.name + " k=" + std::to_string(k), "m-2n not in -2N");
        continue;
      }
      out.add(5, r5, "fischer", b.name + " k=" + std::to_string(k), f.ok,
              "dim P_k=" + std::to_string(f.dim_pk) + " rank=" + std::to_string(f.span_rank),
              "sum dim R^2j H=" + std::to_string(f.sum_harmonic));
    }
  }
}

void laguerre_suite(const ModelParams& mp, const SuiteOptions& opt, Out& out) {
  const std::string r6 = "generalised Laguerre function identities";
  out.section(6);
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) {
      const int mu = mp.mu() + 2 * k, nu = mp.nu() + 2 * l;
      for (int j = 0; j <= opt.max_degree + 1; ++j)
        for (auto& id : laguerre_identities(mu, nu, j)) {
          const bool ok = id.holds();
          out.add(6, r6, id.name, "mu=" + std::to_string(mu) + " nu=" + std::to_string(nu) + " j=" + std::to_string(j),
                  ok, ok ? "" : id.lhs.str(), ok ? "" : id.rhs.str());
        }
    }
  const std::string r7 = "Laguerre function vs generating function";
  out.section(7);
  for (int j = 0; j <= 3; ++j)
    for (double x : {0.5, 1.0, 2.0}) {
      const double exact = laguerre(mp.mu(), mp.nu(), j).value.eval(x).real();
      const double oracle = laguerre_numeric_oracle(mp.mu(), mp.nu(), j, x);
      const double scale = std::max(std::fabs(exact), std::fabs(laguerre(mp.mu(), mp.nu(), 0).value.eval(x).real()));
      out.add(7, r7, "numeric_oracle", "j=" + std::to_string(j) + " x=" + num(x),
              std::fabs(oracle - exact) <= kNumericTol * scale, num(exact), num(oracle));
    }
}

void wmodule(const ModelParams& mp, const SuiteOptions& opt, Out& out) {
  const std::string r8 = "Bessel operator action on W", r9 = "structure of W_j and the intertwiner";
  if (auto h = w_hypothesis(mp); !h.empty()) {
    out.skip(8, r8, "w_module", h);
    out.skip(9, r9, "w_module", h);
    return;
  }
  out.section(8);
  TKK tkk(mp);
  WModule w(tkk, opt.max_j);
  auto report = [&](int crit, const std::string& ref, const IdentityReport& r) {
    if (r.skipped) {
      out.rows.push_back({r.name, r.indices, Status::Skipped, "", "nu+2l = 0", ref, crit});
      return;
    }
    out.add(crit, ref, r.name, r.indices, r.ok, r.ok ? "" : r.lhs, r.ok ? "" : r.rhs);
  };
  for (int j = 0; j <= opt.max_j; ++j)
    for (int i : w.level(j)) {
      for (int v = 0; v < mp.nvars(); ++v) report(8, r8, verify_bessel_action(w, i, v));
      report(8, r8, verify_le_action(w, i));
    }

  out.section(9);
  for (int j = 0; j <= opt.max_j; ++j) {
    const long lev = static_cast<long>(w.level(j).size());
    const long dec = dim_wj_decomposition(mp, j), prod = dim_wj_product(mp, j);
    out.add(9, r9, "dim_wj", "j=" + std::to_string(j), lev == dec && dec == prod,
            "basis " + std::to_string(lev) + ", sum " + std::to_string(dec), "product " + std::to_string(prod));
  }
  PhiIso phi(w);
  std::mt19937 rng(opt.seed);
  for (int j = 0; j <= opt.max_j; ++j) {
    std::vector<int> lev = w.level(j);
    std::shuffle(lev.begin(), lev.end(), rng);
    lev.resize(std::min<size_t>(lev.size(), 5));
    std::sort(lev.begin(), lev.end());
    for (int i : lev) {
      out.add(9, r9, "phi_harmonic", w.basis()[i].label(), phi.harmonic(phi.image(i)));
      for (int v = 0; v < mp.nvars(); ++v) report(9, r9, phi.verify_intertwiner(i, v));
    }
  }
}

void functional(const ModelParams& mp, const SuiteOptions& opt, Out& out) {
  const std::string r11 = "integral of K~_{nu/2}^2", r12 = "properties of the orbit integral",
                    r13 = "skew-symmetry and non-degeneracy", r15 = "radial moment closed form";
  SpacePtr sp = model_space(mp);
  out.section(11);
  {
    OrbitIntegral I(mp, sp);
    MixedElement k = MixedElement::product(SuperPoly(sp, ExactScalar(1)), RadialElement::K(rat(mp.nu(), 2)));
    try {
      ExactScalar exact = I.pairing(k, k), closed = integral_knu_closed(mp);
      out.add(11, r11, "integral_knu", mp.str(), exact == closed, exact.str(), closed.str());
    } catch (const DivergenceError& e) {
      out.skip(11, r11, "integral_knu", std::string("convergence: ") + e.what());
    }
    for (int n = 0; n <= 3; ++n) {
      ModelParams t(mp.p, mp.q, n);
      Rational a = sigma_quadruple(t), b = sigma_closed(t);
      out.add(11, r11, "sigma_sum", t.str(), a == b, rat_str(a), rat_str(b));
    }
  }

  out.section(15);
  std::mt19937 rng(opt.seed);
  for (int it = 0; it < 20; ++it) {
    Rational a = rat(static_cast<int>(rng() % 9) - 4, 2), b = rat(static_cast<int>(rng() % 9) - 4, 2);
    Rational thr = 2 * (sgn(a) > 0 ? a : Rational(0)) + 2 * (sgn(b) > 0 ? b : Rational(0));
    Rational s = Rational(static_cast<long>(std::floor(thr.get_d())) + 1 + static_cast<long>(rng() % 4));
    const double exact = radial_moment(s, a, b).to_complex().real();
    const double quad = radial_moment_quadrature(s.get_d(), a.get_d(), b.get_d());
    out.add(15, r15, "radial_moment", "sigma=" + rat_str(s) + " alpha=" + rat_str(a) + " beta=" + rat_str(b),
            std::fabs(quad - exact) <= kNumericTol * std::fabs(exact), num(exact), num(quad));
  }

  if (auto h = w_hypothesis(mp); !h.empty()) {
    out.skip(12, r12, "integral_properties", h);
    out.skip(13, r13, "skew_symmetry", h);
    return;
  }
  out.section(12);
  const int jskew = std::min(opt.max_j, 1);
  TKK tkk(mp);
  WModule w(tkk, jskew + 1);
  OrbitIntegral I(mp, w.calculus().space());
  const int pool = static_cast<int>(w.level(0).size() + w.level(1).size());
  std::vector<std::pair<int, int>> samples = {{0, 0}};
  while (samples.size() < 10) samples.push_back({static_cast<int>(rng() % pool), static_cast<int>(rng() % pool)});
  for (auto& c : verify_integral_properties(w, I, samples))
    out.add(12, r12, c.name, c.indices, c.ok, c.ok ? "" : c.lhs, c.ok ? "" : c.rhs);

  out.section(13);
  if (mp.mu() + mp.nu() < 0) {
    out.skip(13, r13, "skew_symmetry", "p+q-2n >= 6");
  } else {
    SkewReport s = verify_skew_symmetry(w, I, jskew);
    out.add(13, r13, "skew_symmetry", "j<=" + std::to_string(jskew) + ", all TKK basis X", s.failures.empty(),
            std::to_string(s.checked) + " checked, " + std::to_string(s.failures.size()) + " failing",
            std::to_string(s.nonzero_pairs) + " nonzero pairings");
    for (auto& c : s.failures) out.add(13, r13, c.name, c.indices, false, c.lhs, c.rhs);
  }
  GramReport g = gram_nondegeneracy(w, I, 0);
  out.add(13, r13, "gram_w0_det", "size " + std::to_string(g.size), g.ok, g.det.str(), "nonzero");
  out.add(13, r13, "gram_w0_superhermitian", "size " + std::to_string(g.size), g.superhermitian);
}

void fourier(const ModelParams& mp, const SuiteOptions&, Out& out) {
  const std::string r14 = "Fourier-conjugated representation";
  out.section(14);
  TKK tkk(mp);
  const Rational crit = 2 - mp.M();
  for (const Rational& lam : test_lambdas(mp)) {
    auto take = [&](const std::vector<FourierCheck>& rows) {
      for (auto& c : rows) out.add(14, r14, c.name, lam_str(lam) + " " + c.indices, c.ok, c.lhs, c.rhs);
    };
    take(verify_fourier_table(tkk, lam));
    take(verify_adjoint(tkk, lam));
    KerDeltaReport k = verify_ker_delta(tkk, lam);
    take(k.rows);
    out.add(14, r14, "ker_delta_invariant", lam_str(lam), k.preserves == (lam == crit), k.preserves ? "yes" : "no",
            lam == crit ? "yes" : "no");
  }
  const Rational mc = mu_critical(mp);
  const Rational other = Rational(-(mp.M() - 2)) / Rational(4 * (mp.M() + 1));
  out.add(0, "critical constant", "mu_critical", mp.str(), mc == other, rat_str(mc), rat_str(other));
}

void gkdim(const ModelParams& mp, const SuiteOptions&, Out& out) {
  const std::string r10 = "Gelfand-Kirillov dimension";
  out.section(10);
  if ((mp.p + mp.q) % 2) {
    out.skip(10, r10, "gk_degree", "p+q even");
    return;
  }
  GKReport g = gk_dimension(mp, 2 * mp.n + 14);
  out.add(10, r10, "gk_degree", mp.str(), g.stabilized && g.degree == mp.p + mp.q - 3, std::to_string(g.degree),
          std::to_string(mp.p + mp.q - 3));
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const ModelParams& mp, const SuiteOptions& opt) {
  SuiteReport rep{suite, mp, {}, 0, {}};
  Out out{rep.checks, rep.criterion_seconds};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (suite == "algebra") algebra(mp, opt, out);
    else if (suite == "representation") representation(mp, opt, out);
    else if (suite == "harmonics") harmonics(mp, opt, out);
    else if (suite == "laguerre") laguerre_suite(mp, opt, out);
    else if (suite == "wmodule") wmodule(mp, opt, out);
    else if (suite == "functional") functional(mp, opt, out);
    else if (suite == "fourier") fourier(mp, opt, out);
    else if (suite == "gkdim") gkdim(mp, opt, out);
    else throw std::invalid_argument("unknown suite " + suite);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    out.add(0, "", "exception", "", false, e.what());
  }
  out.section(0);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<SuiteReport> run_suites(const std::vector<SuiteTask>& tasks, const SuiteOptions& opt, int jobs) {
  std::vector<SuiteReport> out(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < tasks.size();) out[i] = run_suite(tasks[i].suite, tasks[i].triple, opt);
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (jobs == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace ospmin
