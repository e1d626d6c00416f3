#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghgd/distribution.hpp"
#include "ghgd/instance.hpp"
#include "ghgd/oracle.hpp"

namespace ghgd::cli {

enum class Command { Stats, Pmf, Bound, Significance, Oracle, Simulate, Crosscheck };
enum class OutputFormat { Json, Csv, Plain };

std::string_view to_string(Command command);
std::string_view to_string(OutputFormat format);
std::string_view to_string(OverlapMode mode);
std::string_view to_string(VariableKind kind);
Command command_from_string(const std::string& text);
OutputFormat format_from_string(const std::string& text);
OverlapMode mode_from_string(const std::string& text);

// One unit of work, parseable from command-line flags or from one record of a
// batch file. Optional fields resolve per command in validated().
struct JobSpec {
  Command command = Command::Stats;
  std::int64_t n = 0;
  std::vector<std::int64_t> sizes;
  std::optional<int> t;  // defaults to T (crosscheck: all levels)
  OverlapMode mode = OverlapMode::ExactT;
  int max_order = 2;  // --v
  std::optional<std::int64_t> trials;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  std::optional<std::int64_t> observed_k;
  std::int64_t budget = kDefaultEnumerationBudget;
  OutputFormat format = OutputFormat::Json;
};

// A JobSpec whose instance has been constructed and whose combination of
// options has been checked. Building one runs every validation before any
// computation starts.
struct ValidatedJob {
  JobSpec spec;
  Instance instance;
  int t;  // resolved; for crosscheck, -1 means "all levels"
};
ValidatedJob validated(const JobSpec& spec);

// One JSON object mirroring JobSpec, e.g.
//   {"command":"stats","n":4,"m":[2,2],"t":2,"mode":"exact-t"}
JobSpec jobspec_from_json(const nlohmann::json& record);

// Newline-delimited JSON records; blank lines are ignored. All-or-nothing:
// the first malformed or invalid record aborts the parse with its line
// number, before any job runs.
std::vector<JobSpec> parse_batch(std::istream& input);

}  // namespace ghgd::cli
