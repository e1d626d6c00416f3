#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ghgd/distribution.hpp"
#include "ghgd/instance.hpp"
#include "ghgd/moments.hpp"
#include "ghgd/numeric.hpp"

namespace ghgd {

// Per-configuration overlap census: counts[l] = number of elements covered by
// exactly l of the T subsets. sum counts = n, sum l*counts[l] = sum m_i.
struct OverlapProfile {
  std::vector<std::int64_t> counts;  // length T+1
};

struct SampleStats {
  std::int64_t trials = 0;
  Rational mean;
  Rational variance;  // unbiased; 0 when trials == 1
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::uint64_t seed = 0;
};

// Deterministic refusal when an enumeration would visit more than `budget`
// configurations. Carries the exact count so callers can raise the budget.
class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  EnumerationBudgetExceeded(BigInt configurations, std::int64_t budget);
  const BigInt& configurations() const { return configurations_; }
  std::int64_t budget() const { return budget_; }

 private:
  BigInt configurations_;
  std::int64_t budget_;
};

inline constexpr std::int64_t kDefaultEnumerationBudget = 10'000'000;

// Ground truth by exhaustive iteration of every configuration (an odometer of
// T lexicographic combination generators; nothing is materialized). Exact
// rational pmf with denominator total_configurations.
DistributionTable enumerate_distribution(const Instance& inst, int t, OverlapMode mode,
                                         std::int64_t budget = kDefaultEnumerationBudget);

// Visit the overlap census of every configuration, in enumeration order.
void visit_profiles(const Instance& inst, const std::function<void(const OverlapProfile&)>& fn,
                    std::int64_t budget = kDefaultEnumerationBudget);

// All overlap levels from one enumeration pass: exact[t] and at_least[t] for
// t = 0..T. Cheaper than T+1 separate runs when checking whole families.
struct LevelDistributions {
  std::vector<DistributionTable> exact;
  std::vector<DistributionTable> at_least;
};
LevelDistributions enumerate_all_levels(const Instance& inst,
                                        std::int64_t budget = kDefaultEnumerationBudget);

// Exact E(x_a * x_b) by enumeration, where x_a counts elements whose
// membership pattern matches selection a exactly. a == b is allowed here (it
// is the enumerated second moment). Independent of the closed-form path.
Rational enumerated_cross_moment(const Instance& inst, const SubsetSelection& a,
                                 const SubsetSelection& b,
                                 std::int64_t budget = kDefaultEnumerationBudget);

// Monte Carlo sampler for instances beyond enumeration reach. Each trial
// draws the T subsets by partial Fisher-Yates; trial randomness is derived
// independently from (seed, trial index), so identical inputs give identical
// stats regardless of evaluation order. See README for the exact scheme.
SampleStats simulate(const Instance& inst, int t, OverlapMode mode, std::int64_t trials,
                     std::uint64_t seed);

}  // namespace ghgd
