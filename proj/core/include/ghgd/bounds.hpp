#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ghgd/distribution.hpp"
#include "ghgd/instance.hpp"
#include "ghgd/numeric.hpp"
#include "ghgd/oracle.hpp"

namespace ghgd {

enum class BoundMethod { ChebyshevEq14, ChebyshevGeneral, VysochanskiiPetunin, ExactEnumeration };

std::string_view to_string(BoundMethod method);

// Estimate of the tail probability P(x >= threshold_k). Exact reports carry a
// rational p-value; inequality methods carry a floating upper bound clamped to
// [0, 1]. `bound` always holds the usable numeric value.
struct BoundReport {
  Rational mean;
  Rational variance;
  BoundMethod method = BoundMethod::ChebyshevGeneral;
  std::int64_t threshold_k = 1;
  std::optional<Rational> exact_p_value;  // ExactEnumeration only
  double bound = 1.0;
  bool valid = true;
  std::string reason;  // why invalid, or why the bound is vacuous
};

// P(x >= 1) <= variance/(1-mean)^2 (general) and, substituting the variance
// by the mean, <= mean/(1-mean)^2. Both are vacuous for mean >= 1: the
// reports come back flagged invalid rather than throwing.
struct ChebyshevBounds {
  BoundReport general;    // variance/(1-mean)^2
  BoundReport mean_form;  // mean/(1-mean)^2
};
ChebyshevBounds chebyshev_p_at_least_one(const Rational& mean, const Rational& variance);

// Largest mean for which the chosen bound keeps P(x >= 1) <= alpha, taking
// the variance equal to the mean.
//   ChebyshevEq14:       root in (0,1) of E/(1-E)^2 = alpha (closed form)
//   VysochanskiiPetunin: root of E + lambda*sqrt(E) = 1 with lambda =
//                        3*sqrt(0.05/alpha), the 3-sigma construction pinned
//                        at alpha = 0.05
// At alpha = 0.05 these give ~0.04554 and ~0.09167.
double max_mean_for_alpha(double alpha, BoundMethod method);

// E(x_T) - Var(x_T) and its ratio to the mean. The gap is nonnegative for
// every valid instance and vanishes only when the mean does; the ratio is
// absent when E = 0.
struct MeanVarianceGap {
  Rational expectation;
  Rational variance;
  Rational gap;
  std::optional<Rational> ratio;  // gap / E
};
MeanVarianceGap mean_variance_gap(const Instance& inst);

// Significance of an observed overlap count: exact tail p-value when the
// instance is enumerable within budget (or via the full-overlap pmf when
// t == T), otherwise the one-sided Chebyshev bound variance/(k - mean)^2 when
// k exceeds the mean, else a valid but uninformative bound of 1. The method
// field always says which path produced the number.
BoundReport overlap_significance(const Instance& inst, int t, OverlapMode mode,
                                 std::int64_t observed_k,
                                 std::int64_t budget = kDefaultEnumerationBudget);

}  // namespace ghgd
