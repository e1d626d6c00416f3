#include "ghgd/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ghgd/combinatorics.hpp"
#include "ghgd/moments.hpp"

namespace ghgd {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

BoundReport exact_report(Rational mean, Rational variance, std::int64_t k, Rational p) {
  BoundReport report;
  report.mean = std::move(mean);
  report.variance = std::move(variance);
  report.method = BoundMethod::ExactEnumeration;
  report.threshold_k = k;
  report.bound = to_double(p);
  report.exact_p_value = std::move(p);
  return report;
}

}  // namespace

std::string_view to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::ChebyshevEq14: return "chebyshev-eq14";
    case BoundMethod::ChebyshevGeneral: return "chebyshev-general";
    case BoundMethod::VysochanskiiPetunin: return "vysochanskii-petunin";
    case BoundMethod::ExactEnumeration: return "exact-enumeration";
  }
  return "unknown";
}

ChebyshevBounds chebyshev_p_at_least_one(const Rational& mean, const Rational& variance) {
  ChebyshevBounds bounds;
  bounds.general.mean = bounds.mean_form.mean = mean;
  bounds.general.variance = bounds.mean_form.variance = variance;
  bounds.general.method = BoundMethod::ChebyshevGeneral;
  bounds.mean_form.method = BoundMethod::ChebyshevEq14;
  bounds.general.threshold_k = bounds.mean_form.threshold_k = 1;

  if (mean >= 1) {
    for (auto* report : {&bounds.general, &bounds.mean_form}) {
      report->valid = false;
      report->bound = 1.0;
      report->reason = "mean >= 1: the threshold 1 is not above the mean, the bound is vacuous";
    }
    return bounds;
  }
  const double gap = 1.0 - to_double(mean);
  bounds.general.bound = clamp01(to_double(variance) / (gap * gap));
  bounds.mean_form.bound = clamp01(to_double(mean) / (gap * gap));
  return bounds;
}

double max_mean_for_alpha(double alpha, BoundMethod method) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("alpha must be in (0, 1)");
  }
  switch (method) {
    case BoundMethod::ChebyshevEq14: {
      // E/(1-E)^2 = alpha  <=>  alpha E^2 - (2 alpha + 1) E + alpha = 0;
      // the smaller root is the one in (0, 1).
      const double b = 2.0 * alpha + 1.0;
      return (b - std::sqrt(b * b - 4.0 * alpha * alpha)) / (2.0 * alpha);
    }
    case BoundMethod::VysochanskiiPetunin: {
      // Largest E (with sigma^2 = E) whose mean-plus-lambda-sigma reaches 1:
      // E + lambda*sqrt(E) = 1. lambda = 3 at alpha = 0.05 (the 3-sigma
      // rule), scaled ~ 1/sqrt(alpha) as the inequality prescribes.
      const double lambda = 3.0 * std::sqrt(0.05 / alpha);
      const double root = (-lambda + std::sqrt(lambda * lambda + 4.0)) / 2.0;
      return root * root;
    }
    default:
      throw std::domain_error("max_mean_for_alpha supports chebyshev-eq14 and "
                              "vysochanskii-petunin only");
  }
}

MeanVarianceGap mean_variance_gap(const Instance& inst) {
  MeanVarianceGap result;
  result.expectation = expectation_full_overlap(inst);
  result.variance = variance_full_overlap(inst);
  result.gap = result.expectation - result.variance;
  if (result.expectation != 0) result.ratio = result.gap / result.expectation;
  return result;
}

BoundReport overlap_significance(const Instance& inst, int t, OverlapMode mode,
                                 std::int64_t observed_k, std::int64_t budget) {
  if (observed_k < 0) throw std::domain_error("observed_k must be >= 0");
  const MomentReport moments = moment_report(inst, t, mode);

  // x_{>=T} and x_T coincide, so t == T always has the exact recursion path.
  if (t == inst.subset_count()) {
    return exact_report(moments.mean, moments.variance, observed_k,
                        pmf_full_overlap(inst).tail_at_least(observed_k));
  }
  if (total_configurations(inst) <= budget) {
    return exact_report(moments.mean, moments.variance, observed_k,
                        enumerate_distribution(inst, t, mode, budget).tail_at_least(observed_k));
  }
  if (observed_k == 0) {
    // P(x >= 0) = 1 without any enumeration.
    return exact_report(moments.mean, moments.variance, 0, Rational{1});
  }

  BoundReport report;
  report.mean = moments.mean;
  report.variance = moments.variance;
  report.method = BoundMethod::ChebyshevGeneral;
  report.threshold_k = observed_k;
  if (Rational(observed_k) > moments.mean) {
    const double distance = static_cast<double>(observed_k) - to_double(moments.mean);
    report.bound = clamp01(to_double(moments.variance) / (distance * distance));
  } else {
    report.bound = 1.0;
    report.reason = "observed count does not exceed the mean; bound is uninformative";
  }
  return report;
}

}  // namespace ghgd
