#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "ospmin/suites.hpp"

using namespace ospmin;

namespace {

constexpr int kUsage = 2;

nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["triple"] = {{"p", r.triple.p}, {"q", r.triple.q}, {"n", r.triple.n}};
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : r.checks)
    j["checks"].push_back({{"name", c.name},
                           {"indices", c.indices},
                           {"status", status_str(c.status)},
                           {"lhs", c.lhs},
                           {"rhs", c.rhs},
                           {"paper_ref", c.ref}});
  return j;
}

void print_text(const SuiteReport& r) {
  std::map<std::string, std::array<int, 3>> counts;
  for (auto& c : r.checks) counts[c.name][static_cast<int>(c.status)]++;
  std::cout << (r.failed() ? "FAIL" : "PASS") << "  " << r.suite << " " << r.triple.str() << "\n";
  for (auto& [name, k] : counts) {
    std::cout << "    " << name << ": " << k[0] << " pass";
    if (k[1]) std::cout << ", " << k[1] << " FAIL";
    if (k[2]) std::cout << ", " << k[2] << " skipped";
    std::cout << "\n";
  }
  for (auto& c : r.checks) {
    if (c.status == Status::Pass) continue;
    std::cout << "    " << status_str(c.status) << " " << c.name;
    if (!c.indices.empty()) std::cout << " [" << c.indices << "]";
    if (c.status == Status::Skipped) {
      std::cout << ": requires " << c.rhs << "\n";
      continue;
    }
    std::cout << "\n      lhs: " << c.lhs << "\n      rhs: " << c.rhs << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the minimal representation of osp(p,q|2n)"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");

  std::string suite = "all";
  std::vector<int> ps, qs, ns;
  SuiteOptions opt;
  bool json = false;
  int jobs = 1;
  verify->add_option("--suite", suite, "all or one suite name")->capture_default_str();
  verify->add_option("--p", ps, "p of a triple (repeatable)");
  verify->add_option("--q", qs, "q of a triple (repeatable)");
  verify->add_option("--n", ns, "n of a triple (repeatable)");
  verify->add_option("--max-degree", opt.max_degree, "polynomial degree cap")->capture_default_str();
  verify->add_option("--max-j", opt.max_j, "highest W level")->capture_default_str();
  verify->add_flag("--json", json, "machine-readable report");
  verify->add_option("--jobs", jobs, "worker threads")->envname("OSPMIN_JOBS")->capture_default_str();
  verify->add_option("--seed", opt.seed, "seed for sampled checks")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  auto usage = [](const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    return kUsage;
  };
  if (suite != "all" && !is_suite(suite)) return usage("unknown suite '" + suite + "'");
  if (ps.size() != qs.size() || ps.size() != ns.size()) return usage("--p, --q and --n must be given equally often");
  if (opt.max_degree < 1) return usage("--max-degree must be >= 1");
  if (opt.max_j < 0) return usage("--max-j must be >= 0");
  if (jobs < 1) return usage("--jobs must be >= 1");

  std::vector<ModelParams> triples;
  if (ps.empty()) triples = {ModelParams(4, 4, 1), ModelParams(6, 4, 1), ModelParams(3, 5, 0)};
  for (size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] < 2 || qs[i] < 2) return usage("p >= 2 and q >= 2 required");
    try {
      triples.emplace_back(ps[i], qs[i], ns[i]);
    } catch (const std::invalid_argument& e) {
      return usage(e.what());
    }
  }

  std::vector<SuiteTask> tasks;
  for (auto& t : triples)
    for (auto& s : suite_names())
      if (suite == "all" || suite == s) tasks.push_back({s, t});
  std::vector<SuiteReport> reports = run_suites(tasks, opt, jobs);

  bool failed = false;
  for (auto& r : reports) failed = failed || r.failed();
  if (json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (auto& r : reports) out.push_back(to_json(r));
    std::cout << out.dump(1) << "\n";
  } else {
    for (auto& r : reports) print_text(r);
    std::cout << (failed ? "FAIL" : "PASS") << "\n";
  }
  return failed ? 1 : 0;
}
