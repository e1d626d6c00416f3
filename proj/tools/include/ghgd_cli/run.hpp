#pragma once

#include <string>
#include <vector>

#include "ghgd_cli/jobspec.hpp"

namespace ghgd::cli {

// Exit codes: 0 success, 1 usage/validation error, 2 enumeration budget
// refusal, 3 crosscheck mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitMismatch = 3;

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // the serialized report (stdout)
  std::string error;   // diagnostic (stderr)
};

struct CrosscheckRow {
  int t = 0;
  std::string quantity;
  std::string formula;  // "num/den"
  std::string oracle;   // "num/den"
  bool equal = false;
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  bool all_equal() const;
};

int crosscheck_exit_code(const CrosscheckReport& report);

RunResult run(const JobSpec& spec);

// Runs every job, concatenating outputs in input order; the exit code is the
// worst per-job code.
RunResult run_batch(const std::vector<JobSpec>& jobs);

}  // namespace ghgd::cli
