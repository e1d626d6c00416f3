#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghgd_cli/jobspec.hpp"
#include "ghgd_cli/run.hpp"

namespace cli = ghgd::cli;

namespace {

struct Flags {
  std::int64_t n = 0;
  std::vector<std::int64_t> m;
  std::optional<int> t;
  std::string mode = "exact-t";
  int v = 2;
  std::optional<std::int64_t> trials;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  std::optional<std::int64_t> observed_k;
  std::optional<std::int64_t> budget;
  std::string format = "json";
};

std::int64_t default_budget() {
  if (const char* env = std::getenv("GHGD_ENUM_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("GHGD_ENUM_BUDGET is not an integer: '" + std::string(env) + "'");
    }
  }
  return ghgd::kDefaultEnumerationBudget;
}

cli::JobSpec make_spec(cli::Command command, const Flags& flags) {
  cli::JobSpec spec;
  spec.command = command;
  spec.n = flags.n;
  spec.sizes = flags.m;
  spec.t = flags.t;
  spec.mode = cli::mode_from_string(flags.mode);
  spec.max_order = flags.v;
  spec.trials = flags.trials;
  spec.seed = flags.seed;
  spec.alpha = flags.alpha;
  spec.observed_k = flags.observed_k;
  spec.budget = flags.budget.value_or(default_budget());
  spec.format = cli::format_from_string(flags.format);
  return spec;
}

void add_instance_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--n", flags.n, "population size")->required();
  cmd->add_option("--m", flags.m, "comma-separated subset sizes m_1,..,m_T")
      ->required()
      ->delimiter(',');
  cmd->add_option("--format", flags.format, "output format: json|csv|plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
}

void add_level_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--t", flags.t, "overlap level (default: T, the full overlap)");
  cmd->add_option("--mode", flags.mode, "exact-t|at-least-t")
      ->check(CLI::IsMember({"exact-t", "at-least-t"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact statistics for the number of elements overlapped by T subsets\n"
               "drawn uniformly from an n-element population"};
  app.require_subcommand(0, 1);

  std::string batch_path;
  app.add_option("--batch", batch_path,
                 "run newline-delimited JSON job records from FILE ('-' for standard input)");

  Flags flags;
  std::vector<cli::JobSpec> jobs;

  auto* stats = app.add_subcommand("stats", "closed-form mean, variance and moments");
  add_instance_flags(stats, flags);
  add_level_flags(stats, flags);
  stats->add_option("--v", flags.v, "highest moment order to report (full overlap only)");
  stats->callback([&] { jobs.push_back(make_spec(cli::Command::Stats, flags)); });

  auto* pmf = app.add_subcommand("pmf", "exact pmf of the fully-overlapped count");
  add_instance_flags(pmf, flags);
  pmf->add_option("--t", flags.t, "overlap level; must equal T");
  pmf->callback([&] { jobs.push_back(make_spec(cli::Command::Pmf, flags)); });

  auto* bound = app.add_subcommand("bound", "tail bounds for P(x >= 1) and alpha thresholds");
  add_instance_flags(bound, flags);
  add_level_flags(bound, flags);
  bound->add_option("--alpha", flags.alpha, "significance level for max-mean thresholds");
  bound->callback([&] { jobs.push_back(make_spec(cli::Command::Bound, flags)); });

  auto* significance =
      app.add_subcommand("significance", "p-value (exact when enumerable) of an observed count");
  add_instance_flags(significance, flags);
  add_level_flags(significance, flags);
  significance->add_option("--observed-k", flags.observed_k, "observed overlap count")->required();
  significance->add_option("--budget", flags.budget, "enumeration budget in configurations");
  significance->callback([&] { jobs.push_back(make_spec(cli::Command::Significance, flags)); });

  auto* oracle = app.add_subcommand("oracle", "exact pmf by exhaustive enumeration");
  add_instance_flags(oracle, flags);
  add_level_flags(oracle, flags);
  oracle->add_option("--budget", flags.budget, "enumeration budget in configurations");
  oracle->callback([&] { jobs.push_back(make_spec(cli::Command::Oracle, flags)); });

  auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo sampling");
  add_instance_flags(simulate, flags);
  add_level_flags(simulate, flags);
  simulate->add_option("--trials", flags.trials, "number of trials")->required();
  simulate->add_option("--seed", flags.seed, "RNG seed (default 0)");
  simulate->callback([&] { jobs.push_back(make_spec(cli::Command::Simulate, flags)); });

  auto* crosscheck =
      app.add_subcommand("crosscheck", "formula vs enumeration oracle, exact-equality verdicts");
  add_instance_flags(crosscheck, flags);
  crosscheck->add_option("--t", flags.t, "single overlap level (default: all levels)");
  crosscheck->add_option("--budget", flags.budget, "enumeration budget in configurations");
  crosscheck->callback([&] { jobs.push_back(make_spec(cli::Command::Crosscheck, flags)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kExitOk : cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }

  try {
    if (!batch_path.empty()) {
      if (!jobs.empty()) {
        std::cerr << "error: --batch cannot be combined with a subcommand\n";
        return cli::kExitUsage;
      }
      if (batch_path == "-") {
        jobs = cli::parse_batch(std::cin);
      } else {
        std::ifstream input(batch_path);
        if (!input) {
          std::cerr << "error: cannot open batch file '" << batch_path << "'\n";
          return cli::kExitUsage;
        }
        jobs = cli::parse_batch(input);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }

  if (jobs.empty()) {
    if (batch_path.empty()) {
      std::cerr << app.help();
      return cli::kExitUsage;
    }
    return cli::kExitOk;  // empty batch input is a valid no-op
  }

  const cli::RunResult result = cli::run_batch(jobs);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
