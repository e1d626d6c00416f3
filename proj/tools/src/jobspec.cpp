#include "ghgd_cli/jobspec.hpp"

#include <istream>
#include <stdexcept>

namespace ghgd::cli {

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Stats: return "stats";
    case Command::Pmf: return "pmf";
    case Command::Bound: return "bound";
    case Command::Significance: return "significance";
    case Command::Oracle: return "oracle";
    case Command::Simulate: return "simulate";
    case Command::Crosscheck: return "crosscheck";
  }
  return "unknown";
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Plain: return "plain";
  }
  return "unknown";
}

std::string_view to_string(OverlapMode mode) {
  return mode == OverlapMode::ExactT ? "exact-t" : "at-least-t";
}

std::string_view to_string(VariableKind kind) {
  switch (kind) {
    case VariableKind::FullOverlap: return "full-overlap";
    case VariableKind::ExactT: return "exact-t";
    case VariableKind::AtLeastT: return "at-least-t";
  }
  return "unknown";
}

Command command_from_string(const std::string& text) {
  if (text == "stats") return Command::Stats;
  if (text == "pmf") return Command::Pmf;
  if (text == "bound") return Command::Bound;
  if (text == "significance") return Command::Significance;
  if (text == "oracle") return Command::Oracle;
  if (text == "simulate") return Command::Simulate;
  if (text == "crosscheck") return Command::Crosscheck;
  throw std::invalid_argument("unknown command '" + text + "'");
}

OutputFormat format_from_string(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "plain") return OutputFormat::Plain;
  throw std::invalid_argument("unknown format '" + text + "' (json|csv|plain)");
}

OverlapMode mode_from_string(const std::string& text) {
  if (text == "exact-t") return OverlapMode::ExactT;
  if (text == "at-least-t") return OverlapMode::AtLeastT;
  throw std::invalid_argument("unknown mode '" + text + "' (exact-t|at-least-t)");
}

ValidatedJob validated(const JobSpec& spec) {
  Instance instance(spec.n, spec.sizes);  // validates n, T >= 2, 0 <= m_i <= n
  const int subsets = instance.subset_count();

  int t = spec.t.value_or(spec.command == Command::Crosscheck ? -1 : subsets);
  if (spec.t.has_value() || spec.command != Command::Crosscheck) {
    if (t < 0 || t > subsets) {
      throw std::invalid_argument("t = " + std::to_string(t) + " not in 0.." +
                                  std::to_string(subsets));
    }
  }

  switch (spec.command) {
    case Command::Stats:
      if (spec.max_order < 2) throw std::invalid_argument("--v must be >= 2");
      if (spec.max_order > 2 && t != subsets) {
        throw std::invalid_argument(
            "--v > 2 needs the full-overlap variable (t = T); no closed form exists for "
            "higher moments below full overlap");
      }
      break;
    case Command::Pmf:
      if (t != subsets) {
        throw std::invalid_argument(
            "pmf only has a closed form for the full overlap (t = T); use the oracle "
            "command for other levels");
      }
      break;
    case Command::Bound:
      if (spec.alpha && !(*spec.alpha > 0.0 && *spec.alpha < 1.0)) {
        throw std::invalid_argument("--alpha must be in (0, 1)");
      }
      break;
    case Command::Significance:
      if (!spec.observed_k) throw std::invalid_argument("significance requires --observed-k");
      if (*spec.observed_k < 0) throw std::invalid_argument("--observed-k must be >= 0");
      break;
    case Command::Oracle:
      break;
    case Command::Simulate:
      if (!spec.trials) throw std::invalid_argument("simulate requires --trials");
      if (*spec.trials < 1) throw std::invalid_argument("--trials must be >= 1");
      break;
    case Command::Crosscheck:
      break;
  }
  if (spec.budget < 1) throw std::invalid_argument("--budget must be >= 1");

  return ValidatedJob{spec, std::move(instance), t};
}

JobSpec jobspec_from_json(const nlohmann::json& record) {
  if (!record.is_object()) throw std::invalid_argument("job record must be a JSON object");
  JobSpec spec;
  bool have_command = false;
  bool have_n = false;
  bool have_m = false;
  for (const auto& [key, value] : record.items()) {
    try {
      if (key == "command") {
        spec.command = command_from_string(value.get<std::string>());
        have_command = true;
      } else if (key == "n") {
        spec.n = value.get<std::int64_t>();
        have_n = true;
      } else if (key == "m") {
        spec.sizes = value.get<std::vector<std::int64_t>>();
        have_m = true;
      } else if (key == "t") {
        spec.t = value.get<int>();
      } else if (key == "mode") {
        spec.mode = mode_from_string(value.get<std::string>());
      } else if (key == "v") {
        spec.max_order = value.get<int>();
      } else if (key == "trials") {
        spec.trials = value.get<std::int64_t>();
      } else if (key == "seed") {
        spec.seed = value.get<std::uint64_t>();
      } else if (key == "alpha") {
        spec.alpha = value.get<double>();
      } else if (key == "observed_k") {
        spec.observed_k = value.get<std::int64_t>();
      } else if (key == "budget") {
        spec.budget = value.get<std::int64_t>();
      } else if (key == "format") {
        spec.format = format_from_string(value.get<std::string>());
      } else {
        throw std::invalid_argument("unknown field '" + key + "'");
      }
    } catch (const nlohmann::json::exception&) {
      throw std::invalid_argument("field '" + key + "' has the wrong type");
    }
  }
  if (!have_command) throw std::invalid_argument("missing field 'command'");
  if (!have_n) throw std::invalid_argument("missing field 'n'");
  if (!have_m) throw std::invalid_argument("missing field 'm'");
  return spec;
}

std::vector<JobSpec> parse_batch(std::istream& input) {
  std::vector<JobSpec> jobs;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      JobSpec spec = jobspec_from_json(nlohmann::json::parse(line));
      validated(spec);  // reject invalid records before any job runs
      jobs.push_back(std::move(spec));
    } catch (const std::exception& e) {
      throw std::invalid_argument("batch line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return jobs;
}

}  // namespace ghgd::cli
