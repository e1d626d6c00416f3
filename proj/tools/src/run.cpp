#include "ghgd_cli/run.hpp"

#include <algorithm>

#include "ghgd_cli/reports.hpp"
#include "ghgd/bounds.hpp"
#include "ghgd/combinatorics.hpp"
#include "ghgd/moments.hpp"
#include "ghgd/oracle.hpp"

namespace ghgd::cli {

namespace {

OrderedJson report_header(const ValidatedJob& job) {
  OrderedJson report;
  report["command"] = std::string(to_string(job.spec.command));
  report["n"] = job.instance.population();
  report["m"] = job.instance.sizes();
  return report;
}

std::string_view variable_label(const ValidatedJob& job) {
  if (job.t == job.instance.subset_count()) return to_string(VariableKind::FullOverlap);
  return to_string(to_variable_kind(job.spec.mode));
}

OrderedJson pmf_rows(const DistributionTable& table) {
  OrderedJson rows = OrderedJson::array();
  for (std::int64_t k = 0; k <= table.k_max(); ++k) {
    rows.push_back(OrderedJson{{"k", k}, {"probability", rational_json(table.prob(k))}});
  }
  return rows;
}

OrderedJson bound_json(const BoundReport& report) {
  OrderedJson out;
  out["method"] = std::string(to_string(report.method));
  out["threshold_k"] = report.threshold_k;
  out["bound"] = report.bound;
  out["valid"] = report.valid;
  out["reason"] = report.reason;
  return out;
}

OrderedJson run_stats(const ValidatedJob& job) {
  OrderedJson report = report_header(job);
  report["t"] = job.t;
  report["mode"] = std::string(to_string(job.spec.mode));
  report["variable"] = std::string(variable_label(job));
  const MomentReport moments =
      moment_report(job.instance, job.t, job.spec.mode, job.spec.max_order);
  report["mean"] = rational_json(moments.mean);
  report["second_moment"] = rational_json(moments.second_moment);
  report["variance"] = rational_json(moments.variance);
  if (!moments.raw.empty()) {
    OrderedJson raw = OrderedJson::array();
    OrderedJson central = OrderedJson::array();
    for (std::size_t v = 0; v < moments.raw.size(); ++v) {
      raw.push_back(OrderedJson{{"order", v}, {"value", rational_json(moments.raw[v])}});
      central.push_back(OrderedJson{{"order", v}, {"value", rational_json(moments.central[v])}});
    }
    report["raw_moments"] = std::move(raw);
    report["central_moments"] = std::move(central);
  }
  return report;
}

OrderedJson run_pmf(const ValidatedJob& job) {
  OrderedJson report = report_header(job);
  report["t"] = job.t;
  report["variable"] = std::string(to_string(VariableKind::FullOverlap));
  report["total_configurations"] = total_configurations(job.instance).str();
  report["pmf"] = pmf_rows(pmf_full_overlap(job.instance));
  return report;
}

OrderedJson run_oracle(const ValidatedJob& job) {
  OrderedJson report = report_header(job);
  report["t"] = job.t;
  report["mode"] = std::string(to_string(job.spec.mode));
  report["budget"] = job.spec.budget;
  report["total_configurations"] = total_configurations(job.instance).str();
  report["pmf"] =
      pmf_rows(enumerate_distribution(job.instance, job.t, job.spec.mode, job.spec.budget));
  return report;
}

OrderedJson run_bound(const ValidatedJob& job) {
  OrderedJson report = report_header(job);
  report["t"] = job.t;
  report["mode"] = std::string(to_string(job.spec.mode));
  report["variable"] = std::string(variable_label(job));
  const MomentReport moments = moment_report(job.instance, job.t, job.spec.mode);
  report["mean"] = rational_json(moments.mean);
  report["variance"] = rational_json(moments.variance);

  const ChebyshevBounds cheb = chebyshev_p_at_least_one(moments.mean, moments.variance);
  report["p_at_least_1"] = OrderedJson{{"general", bound_json(cheb.general)},
                                       {"mean_substituted", bound_json(cheb.mean_form)}};

  if (job.t == job.instance.subset_count()) {
    const MeanVarianceGap gap = mean_variance_gap(job.instance);
    OrderedJson gap_json;
    gap_json["gap"] = rational_json(gap.gap);
    gap_json["ratio"] = gap.ratio ? rational_json(*gap.ratio) : OrderedJson(nullptr);
    report["mean_variance_gap"] = std::move(gap_json);
  }

  if (job.spec.alpha) {
    const double alpha = *job.spec.alpha;
    OrderedJson thresholds;
    thresholds["alpha"] = alpha;
    for (const auto method : {BoundMethod::ChebyshevEq14, BoundMethod::VysochanskiiPetunin}) {
      const double max_mean = max_mean_for_alpha(alpha, method);
      thresholds[std::string(ghgd::to_string(method))] =
          OrderedJson{{"max_mean", max_mean},
                      {"mean_within_threshold", to_double(moments.mean) <= max_mean}};
    }
    report["alpha_thresholds"] = std::move(thresholds);
  }
  return report;
}

OrderedJson run_significance(const ValidatedJob& job) {
  OrderedJson report = report_header(job);
  report["t"] = job.t;
  report["mode"] = std::string(to_string(job.spec.mode));
  report["observed_k"] = *job.spec.observed_k;
  const BoundReport result = overlap_significance(job.instance, job.t, job.spec.mode,
                                                  *job.spec.observed_k, job.spec.budget);
  report["method"] = std::string(ghgd::to_string(result.method));
  report["mean"] = rational_json(result.mean);
  report["variance"] = rational_json(result.variance);
  if (result.exact_p_value) {
    report["p_value"] = rational_json(*result.exact_p_value);
  }
  report["bound"] = result.bound;
  report["valid"] = result.valid;
  report["reason"] = result.reason;
  return report;
}

OrderedJson run_simulate(const ValidatedJob& job) {
  OrderedJson report = report_header(job);
  report["t"] = job.t;
  report["mode"] = std::string(to_string(job.spec.mode));
  report["trials"] = *job.spec.trials;
  report["seed"] = job.spec.seed;
  const SampleStats stats =
      simulate(job.instance, job.t, job.spec.mode, *job.spec.trials, job.spec.seed);
  report["sample"] = OrderedJson{{"mean", rational_json(stats.mean)},
                                 {"variance", rational_json(stats.variance)},
                                 {"min", stats.min},
                                 {"max", stats.max}};
  return report;
}

OrderedJson run_crosscheck(const ValidatedJob& job, CrosscheckReport& crosscheck) {
  OrderedJson report = report_header(job);
  report["budget"] = job.spec.budget;
  report["total_configurations"] = total_configurations(job.instance).str();

  const LevelDistributions all = enumerate_all_levels(job.instance, job.spec.budget);
  const int subsets = job.instance.subset_count();
  std::vector<int> levels;
  if (job.t < 0) {
    for (int t = 0; t <= subsets; ++t) levels.push_back(t);
  } else {
    levels.push_back(job.t);
  }

  auto add_row = [&](int t, const char* quantity, const Rational& formula, const Rational& oracle) {
    crosscheck.rows.push_back(CrosscheckRow{t, quantity, rational_string(formula),
                                            rational_string(oracle), formula == oracle});
  };
  for (const int t : levels) {
    const auto& exact = all.exact[static_cast<std::size_t>(t)];
    const auto& at_least = all.at_least[static_cast<std::size_t>(t)];
    add_row(t, "expectation-exact", expectation_exact(job.instance, t), exact.mean());
    add_row(t, "variance-exact", variance_exact(job.instance, t), exact.variance());
    add_row(t, "expectation-at-least", expectation_at_least(job.instance, t), at_least.mean());
    add_row(t, "variance-at-least", variance_at_least(job.instance, t), at_least.variance());
    if (t == subsets) {
      crosscheck.rows.push_back(CrosscheckRow{
          t, "pmf-full-overlap", "", "",
          same_pmf(pmf_full_overlap(job.instance), all.exact[static_cast<std::size_t>(t)])});
    }
  }

  OrderedJson checks = OrderedJson::array();
  for (const auto& row : crosscheck.rows) {
    checks.push_back(OrderedJson{{"t", row.t},
                                 {"quantity", row.quantity},
                                 {"formula", row.formula},
                                 {"oracle", row.oracle},
                                 {"equal", row.equal}});
  }
  report["checks"] = std::move(checks);
  report["all_equal"] = crosscheck.all_equal();
  return report;
}

}  // namespace

bool CrosscheckReport::all_equal() const {
  return std::all_of(rows.begin(), rows.end(), [](const CrosscheckRow& r) { return r.equal; });
}

int crosscheck_exit_code(const CrosscheckReport& report) {
  return report.all_equal() ? kExitOk : kExitMismatch;
}

RunResult run(const JobSpec& spec) {
  try {
    const ValidatedJob job = validated(spec);
    OrderedJson report;
    int exit_code = kExitOk;
    switch (spec.command) {
      case Command::Stats: report = run_stats(job); break;
      case Command::Pmf: report = run_pmf(job); break;
      case Command::Bound: report = run_bound(job); break;
      case Command::Significance: report = run_significance(job); break;
      case Command::Oracle: report = run_oracle(job); break;
      case Command::Simulate: report = run_simulate(job); break;
      case Command::Crosscheck: {
        CrosscheckReport crosscheck;
        report = run_crosscheck(job, crosscheck);
        exit_code = crosscheck_exit_code(crosscheck);
        break;
      }
    }
    return RunResult{exit_code, render(report, spec.format), ""};
  } catch (const EnumerationBudgetExceeded& e) {
    return RunResult{kExitBudget, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return RunResult{kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

RunResult run_batch(const std::vector<JobSpec>& jobs) {
  RunResult combined;
  for (const auto& job : jobs) {
    const RunResult result = run(job);
    combined.exit_code = std::max(combined.exit_code, result.exit_code);
    combined.output += result.output;
    combined.error += result.error;
  }
  return combined;
}

}  // namespace ghgd::cli
