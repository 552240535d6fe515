// Verification suites behind `frieze verify`.

#pragma once

#include "frieze/json_io.hpp"

#include <string>
#include <vector>

namespace frieze::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  bool quick = false;
  int max_n = 0;    // 0: the suite's own default
  std::string type; // involutions only; empty means A and D
  int rank = 0;
  unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt);

Json report_json(const std::string& suite, const std::vector<CheckResult>& checks);

// Closed forms for the count tables.
BigInt a_count_formula(int n);
BigInt d_positive_formula(int n);
BigInt d_count_formula(int n);

}  // namespace frieze::cli
