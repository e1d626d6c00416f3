#include "ghgd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ghgd/combinatorics.hpp"

namespace ghgd {

namespace {

// Lexicographic successor of an m-combination of {0..n-1}; false at the end.
bool next_combination(std::vector<std::int64_t>& combo, std::int64_t n) {
  const auto m = static_cast<std::int64_t>(combo.size());
  std::int64_t i = m - 1;
  while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - m + i) --i;
  if (i < 0) return false;
  ++combo[static_cast<std::size_t>(i)];
  for (std::int64_t j = i + 1; j < m; ++j) {
    combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

void reset_combination(std::vector<std::int64_t>& combo) {
  std::iota(combo.begin(), combo.end(), std::int64_t{0});
}

void check_budget(const Instance& inst, std::int64_t budget) {
  if (budget < 1) throw std::domain_error("enumeration budget must be >= 1");
  const BigInt total = total_configurations(inst);
  if (total > budget) throw EnumerationBudgetExceeded(total, budget);
}

// Odometer over T combination generators; fn sees, per configuration, the
// per-element membership masks (bit i-1 set iff the element is in subset i).
// Nothing is materialized: memory is O(sum m_i + n).
template <typename Fn>
void visit_membership(const Instance& inst, Fn&& fn) {
  const int subsets = inst.subset_count();
  if (subsets > 64) throw std::domain_error("enumeration supports at most 64 subsets");
  const std::int64_t n = inst.population();

  std::vector<std::vector<std::int64_t>> combos(static_cast<std::size_t>(subsets));
  for (int i = 0; i < subsets; ++i) {
    combos[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(inst.size_of(i + 1)));
    reset_combination(combos[static_cast<std::size_t>(i)]);
  }

  std::vector<std::uint64_t> mask(static_cast<std::size_t>(n));
  for (;;) {
    std::fill(mask.begin(), mask.end(), 0);
    for (int i = 0; i < subsets; ++i) {
      for (const auto e : combos[static_cast<std::size_t>(i)]) {
        mask[static_cast<std::size_t>(e)] |= std::uint64_t{1} << i;
      }
    }
    fn(mask);

    int i = subsets - 1;
    while (i >= 0 && !next_combination(combos[static_cast<std::size_t>(i)], n)) {
      reset_combination(combos[static_cast<std::size_t>(i)]);
      --i;
    }
    if (i < 0) break;
  }
}

// Support bound of a tallied table: n for t = 0 (x_0 can reach the whole
// population), min(sum m_i, n) otherwise.
std::int64_t support_max(const Instance& inst, int t) {
  if (t == 0) return inst.population();
  return std::min(inst.size_sum(), inst.population());
}

DistributionTable table_from_tally(const Instance& inst, int t, VariableKind kind,
                                   const std::vector<std::int64_t>& tally, const BigInt& total) {
  const auto k_max = static_cast<std::size_t>(support_max(inst, t));
  for (std::size_t k = k_max + 1; k < tally.size(); ++k) {
    if (tally[k] != 0) throw std::logic_error("enumeration tally outside the variable's support");
  }
  DistributionTable table;
  table.kind = kind;
  table.t = t;
  table.probs.reserve(k_max + 1);
  BigInt sum{0};
  for (std::size_t k = 0; k <= k_max; ++k) {
    sum += tally[k];
    table.probs.emplace_back(BigInt(tally[k]), total);
  }
  if (sum != total) throw std::logic_error("enumeration tally does not sum to the total");
  return table;
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Trial i draws from mt19937_64 seeded with mix(seed + (i+1)*golden); trials
// are independent streams, so evaluation order can never matter.
std::uint64_t trial_seed(std::uint64_t seed, std::int64_t trial) {
  return splitmix64_mix(seed + (static_cast<std::uint64_t>(trial) + 1) * 0x9E3779B97F4A7C15ULL);
}

// Unbiased uniform draw from [0, bound) by 64-bit rejection.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

EnumerationBudgetExceeded::EnumerationBudgetExceeded(BigInt configurations, std::int64_t budget)
    : std::runtime_error("enumeration budget exceeded: " + configurations.str() +
                         " configurations > budget " + std::to_string(budget)),
      configurations_(std::move(configurations)),
      budget_(budget) {}

void visit_profiles(const Instance& inst, const std::function<void(const OverlapProfile&)>& fn,
                    std::int64_t budget) {
  check_budget(inst, budget);
  OverlapProfile profile;
  profile.counts.assign(static_cast<std::size_t>(inst.subset_count()) + 1, 0);
  visit_membership(inst, [&](const std::vector<std::uint64_t>& mask) {
    std::fill(profile.counts.begin(), profile.counts.end(), 0);
    for (const auto bits : mask) ++profile.counts[static_cast<std::size_t>(std::popcount(bits))];
    fn(profile);
  });
}

LevelDistributions enumerate_all_levels(const Instance& inst, std::int64_t budget) {
  check_budget(inst, budget);
  const int subsets = inst.subset_count();
  const auto n = static_cast<std::size_t>(inst.population());

  std::vector<std::vector<std::int64_t>> exact_tally(
      static_cast<std::size_t>(subsets) + 1, std::vector<std::int64_t>(n + 1, 0));
  auto at_least_tally = exact_tally;

  std::vector<std::int64_t> counts(static_cast<std::size_t>(subsets) + 1);
  visit_membership(inst, [&](const std::vector<std::uint64_t>& mask) {
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto bits : mask) ++counts[static_cast<std::size_t>(std::popcount(bits))];
    std::int64_t cumulative = 0;
    for (int t = subsets; t >= 0; --t) {
      cumulative += counts[static_cast<std::size_t>(t)];
      ++exact_tally[static_cast<std::size_t>(t)]
                   [static_cast<std::size_t>(counts[static_cast<std::size_t>(t)])];
      ++at_least_tally[static_cast<std::size_t>(t)][static_cast<std::size_t>(cumulative)];
    }
  });

  const BigInt total = total_configurations(inst);
  LevelDistributions result;
  result.exact.reserve(static_cast<std::size_t>(subsets) + 1);
  result.at_least.reserve(static_cast<std::size_t>(subsets) + 1);
  for (int t = 0; t <= subsets; ++t) {
    result.exact.push_back(table_from_tally(inst, t, VariableKind::ExactT,
                                            exact_tally[static_cast<std::size_t>(t)], total));
    result.at_least.push_back(table_from_tally(inst, t, VariableKind::AtLeastT,
                                               at_least_tally[static_cast<std::size_t>(t)], total));
  }
  return result;
}

DistributionTable enumerate_distribution(const Instance& inst, int t, OverlapMode mode,
                                         std::int64_t budget) {
  if (t < 0 || t > inst.subset_count()) {
    throw std::domain_error("overlap level t = " + std::to_string(t) + " not in 0.." +
                            std::to_string(inst.subset_count()));
  }
  check_budget(inst, budget);
  const BigInt total = total_configurations(inst);
  const auto n = static_cast<std::size_t>(inst.population());

  std::vector<std::int64_t> tally(n + 1, 0);
  visit_membership(inst, [&](const std::vector<std::uint64_t>& mask) {
    std::int64_t k = 0;
    for (const auto bits : mask) {
      const int level = std::popcount(bits);
      if (mode == OverlapMode::ExactT ? level == t : level >= t) ++k;
    }
    ++tally[static_cast<std::size_t>(k)];
  });
  return table_from_tally(inst, t, to_variable_kind(mode), tally, total);
}

Rational enumerated_cross_moment(const Instance& inst, const SubsetSelection& a,
                                 const SubsetSelection& b, std::int64_t budget) {
  if (a.instance() != inst || b.instance() != inst) {
    throw std::domain_error("selections come from a different instance");
  }
  check_budget(inst, budget);

  auto selection_mask = [](const SubsetSelection& sel) {
    std::uint64_t mask = 0;
    for (const int idx : sel.indices()) mask |= std::uint64_t{1} << (idx - 1);
    return mask;
  };
  const std::uint64_t mask_a = selection_mask(a);
  const std::uint64_t mask_b = selection_mask(b);

  BigInt product_sum{0};
  visit_membership(inst, [&](const std::vector<std::uint64_t>& mask) {
    std::int64_t count_a = 0;
    std::int64_t count_b = 0;
    for (const auto bits : mask) {
      if (bits == mask_a) ++count_a;
      if (bits == mask_b) ++count_b;
    }
    product_sum += count_a * count_b;
  });
  return Rational(product_sum, total_configurations(inst));
}

SampleStats simulate(const Instance& inst, int t, OverlapMode mode, std::int64_t trials,
                     std::uint64_t seed) {
  if (t < 0 || t > inst.subset_count()) {
    throw std::domain_error("overlap level t = " + std::to_string(t) + " not in 0.." +
                            std::to_string(inst.subset_count()));
  }
  if (trials < 1) throw std::domain_error("trials must be >= 1");

  const auto n = static_cast<std::size_t>(inst.population());
  std::vector<std::int64_t> pool(n);
  std::vector<std::int64_t> level(n);

  BigInt sum{0};
  BigInt sum_sq{0};
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();

  for (std::int64_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 engine(trial_seed(seed, trial));
    std::fill(level.begin(), level.end(), 0);
    for (int i = 1; i <= inst.subset_count(); ++i) {
      const auto m = static_cast<std::size_t>(inst.size_of(i));
      // partial Fisher-Yates: the first m pool entries are a uniform
      // m-combination of {0..n-1}
      std::iota(pool.begin(), pool.end(), std::int64_t{0});
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t pick = j + uniform_below(engine, static_cast<std::uint64_t>(n - j));
        std::swap(pool[j], pool[pick]);
      }
      for (std::size_t j = 0; j < m; ++j) ++level[static_cast<std::size_t>(pool[j])];
    }
    std::int64_t k = 0;
    for (const auto l : level) {
      if (mode == OverlapMode::ExactT ? l == t : l >= t) ++k;
    }
    sum += k;
    sum_sq += BigInt(k) * k;
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }

  SampleStats stats;
  stats.trials = trials;
  stats.seed = seed;
  stats.min = lo;
  stats.max = hi;
  stats.mean = Rational(sum, BigInt(trials));
  stats.variance = trials == 1 ? Rational{0}
                               : Rational(BigInt(trials) * sum_sq - sum * sum,
                                          BigInt(trials) * (trials - 1));
  return stats;
}

}  // namespace ghgd
