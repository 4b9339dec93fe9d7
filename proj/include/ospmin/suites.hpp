#pragma once

#include <map>
#include <string>
#include <vector>

#include "ospmin/superpoly.hpp"

namespace ospmin {

// Tolerance of every numeric-oracle comparison (relative).
inline constexpr double kNumericTolerance = 1e-8;

enum class Status { Pass, Fail, Skipped };
const char* status_str(Status s);

struct Check {
  std::string name;
  std::string indices;
  Status status = Status::Fail;
  std::string lhs, rhs;
  std::string ref;     // short label of the identity being checked
  int criterion = 0;   // acceptance criterion this row feeds, 0 if none
};

struct SuiteOptions {
  int max_degree = 5;
  int max_j = 2;
  unsigned seed = 1;
};

struct SuiteReport {
  std::string suite;
  ModelParams triple;
  std::vector<Check> checks;
  double seconds = 0;  // wall time; not part of the serialized report
  std::map<int, double> criterion_seconds;
  bool failed() const;
};

// algebra, representation, harmonics, laguerre, wmodule, functional, fourier, gkdim
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite on one triple. Unmet hypotheses give Skipped rows naming the
// hypothesis; unexpected exceptions give a Fail row.
SuiteReport run_suite(const std::string& suite, const ModelParams& mp, const SuiteOptions& opt);

struct SuiteTask {
  std::string suite;
  ModelParams triple;
};
// Runs the tasks on up to `jobs` threads; the result is in task order.
std::vector<SuiteReport> run_suites(const std::vector<SuiteTask>& tasks, const SuiteOptions& opt, int jobs);

}  // namespace ospmin
