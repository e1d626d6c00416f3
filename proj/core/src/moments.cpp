#include "ghgd/moments.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "ghgd/combinatorics.hpp"

namespace ghgd {

namespace {

void check_level(const Instance& inst, int t) {
  if (t < 0 || t > inst.subset_count()) {
    throw std::domain_error("overlap level t = " + std::to_string(t) + " not in 0.." +
                            std::to_string(inst.subset_count()));
  }
}

// E(x_T | n - shift, sizes - shift). A shift that zeroes or crosses any size
// makes the variable identically 0.
Rational expectation_of_shifted_sizes(const std::vector<std::int64_t>& sizes, std::int64_t n,
                                      std::int64_t shift) {
  BigInt product{1};
  for (const auto m : sizes) {
    if (m - shift <= 0) return Rational{0};
    product *= m - shift;
  }
  return Rational(product, ipow(BigInt(n - shift), sizes.size() - 1));
}

// E(x_T^order) of the full-overlap variable with the given size list. The
// recursion state is just (shift depth, order): every step decrements n and
// all sizes together.
Rational raw_moment_of_sizes(const std::vector<std::int64_t>& sizes, std::int64_t n, int order) {
  std::vector<std::vector<std::optional<Rational>>> memo(
      static_cast<std::size_t>(order) + 1,
      std::vector<std::optional<Rational>>(static_cast<std::size_t>(order) + 1));
  auto recurse = [&](auto&& self, int shift, int v) -> Rational {
    if (v == 0) return Rational{1};
    auto& slot = memo[static_cast<std::size_t>(shift)][static_cast<std::size_t>(v)];
    if (slot) return *slot;
    Rational result{0};
    const Rational first = expectation_of_shifted_sizes(sizes, n, shift);
    if (first != 0) {
      Rational sum{0};
      for (int i = 0; i < v; ++i) {
        sum += Rational(binomial(v - 1, i)) * self(self, shift + 1, i);
      }
      result = first * sum;
    }
    slot = result;
    return result;
  };
  return recurse(recurse, 0, order);
}

// Full-overlap second moment E*(1 + E(.|n-1, sizes-1)) of an extended size
// list; the diagonal term of the pair sums.
Rational second_moment_of_sizes(const std::vector<std::int64_t>& sizes, std::int64_t n) {
  const Rational e = expectation_of_shifted_sizes(sizes, n, 0);
  if (e == 0) return Rational{0};
  return e * (1 + expectation_of_shifted_sizes(sizes, n, 1));
}

template <typename Fn>
void for_each_combination(int total, int size, Fn&& fn) {
  std::vector<int> indices(static_cast<std::size_t>(size));
  std::iota(indices.begin(), indices.end(), 1);
  if (size == 0) {
    fn(indices);
    return;
  }
  for (;;) {
    fn(indices);
    int i = size - 1;
    while (i >= 0 && indices[static_cast<std::size_t>(i)] == total - size + i + 1) --i;
    if (i < 0) break;
    ++indices[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) {
      indices[static_cast<std::size_t>(j)] = indices[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::vector<SubsetSelection> selections_of_level(const Instance& inst, int t) {
  std::vector<SubsetSelection> out;
  for_each_combination(inst.subset_count(), t,
                       [&](const std::vector<int>& idx) { out.emplace_back(inst, idx); });
  return out;
}

// Normalization of the pairwise product moment. The derivation admits two
// candidate exponent pairs differing by a factor of n; exhaustive enumeration
// fixes it at n^(T-1) * (n-1)^(T-1). See docs/discrepancy-report.md.
BigInt cross_moment_denominator(std::int64_t n, int subset_count) {
  return ipow(BigInt(n), static_cast<std::uint64_t>(subset_count - 1)) *
         ipow(BigInt(n - 1), static_cast<std::uint64_t>(subset_count - 1));
}

Rational pair_moment(const Instance& inst, const SubsetSelection& a, const SubsetSelection& b) {
  if (a == b) return second_moment_of_sizes(a.extended_values(), inst.population());
  return cross_moment(inst, a, b);
}

Rational pair_sum(const Instance& inst, const std::vector<SubsetSelection>& selections) {
  Rational sum{0};
  for (const auto& a : selections) {
    for (const auto& b : selections) sum += pair_moment(inst, a, b);
  }
  return sum;
}

}  // namespace

SubsetSelection::SubsetSelection(const Instance& inst, std::vector<int> indices)
    : instance_(inst), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    const int idx = indices_[i];
    if (idx < 1 || idx > inst.subset_count()) {
      throw std::domain_error("subset index " + std::to_string(idx) + " not in 1.." +
                              std::to_string(inst.subset_count()));
    }
    if (i > 0 && indices_[i - 1] == idx) {
      throw std::domain_error("duplicate subset index " + std::to_string(idx));
    }
  }
  extended_.reserve(static_cast<std::size_t>(inst.subset_count()));
  std::size_t next_chosen = 0;
  for (int i = 1; i <= inst.subset_count(); ++i) {
    const bool chosen = next_chosen < indices_.size() && indices_[next_chosen] == i;
    if (chosen) ++next_chosen;
    extended_.push_back(SignedSize{
        .index = i,
        .polarity = chosen ? Polarity::Direct : Polarity::Complement,
        .value = chosen ? inst.size_of(i) : inst.population() - inst.size_of(i),
    });
  }
}

std::vector<std::int64_t> SubsetSelection::extended_values() const {
  std::vector<std::int64_t> values;
  values.reserve(extended_.size());
  for (const auto& e : extended_) values.push_back(e.value);
  return values;
}

Rational expectation_full_overlap(const Instance& inst) {
  return expectation_of_shifted_sizes(inst.sizes(), inst.population(), 0);
}

Rational raw_moment_full_overlap(const Instance& inst, int order) {
  if (order < 0) throw std::domain_error("moment order must be >= 0");
  return raw_moment_of_sizes(inst.sizes(), inst.population(), order);
}

Rational central_moment_full_overlap(const Instance& inst, int order) {
  if (order < 0) throw std::domain_error("moment order must be >= 0");
  const Rational mean = expectation_full_overlap(inst);
  std::vector<Rational> raw(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) raw[static_cast<std::size_t>(j)] = raw_moment_full_overlap(inst, j);

  Rational sum{0};
  for (int j = 0; j <= order; ++j) {
    Rational term = Rational(binomial(order, j)) * raw[static_cast<std::size_t>(j)];
    Rational mean_power{1};
    for (int i = 0; i < order - j; ++i) mean_power *= mean;
    term *= mean_power;
    if ((order - j) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

Rational variance_full_overlap(const Instance& inst) {
  const Rational e = expectation_full_overlap(inst);
  if (e == 0) return Rational{0};
  return e * (1 + expectation_of_shifted_sizes(inst.sizes(), inst.population(), 1) - e);
}

SubsetSelection extended_sizes(const Instance& inst, const std::vector<int>& indices) {
  return SubsetSelection(inst, indices);
}

Rational expectation_exact(const Instance& inst, int t) {
  check_level(inst, t);
  BigInt numerator{0};
  for_each_combination(inst.subset_count(), t, [&](const std::vector<int>& idx) {
    BigInt product{1};
    std::size_t next_chosen = 0;
    for (int i = 1; i <= inst.subset_count(); ++i) {
      const bool chosen = next_chosen < idx.size() && idx[next_chosen] == i;
      if (chosen) ++next_chosen;
      product *= chosen ? inst.size_of(i) : inst.population() - inst.size_of(i);
    }
    numerator += product;
  });
  return Rational(numerator,
                  ipow(BigInt(inst.population()), static_cast<std::uint64_t>(inst.subset_count() - 1)));
}

Rational expectation_equal_sizes(std::int64_t population, std::int64_t size, int subsets, int t) {
  if (population < 1) throw std::domain_error("population must be positive");
  if (size < 0 || size > population) throw std::domain_error("size not in [0, population]");
  if (subsets < 2) throw std::domain_error("need at least 2 subsets");
  if (t < 0 || t > subsets) throw std::domain_error("overlap level t not in 0..T");
  const BigInt numerator = binomial(subsets, t) *
                           ipow(BigInt(population - size), static_cast<std::uint64_t>(subsets - t)) *
                           ipow(BigInt(size), static_cast<std::uint64_t>(t));
  return Rational(numerator, ipow(BigInt(population), static_cast<std::uint64_t>(subsets - 1)));
}

Rational expectation_at_least(const Instance& inst, int t) {
  check_level(inst, t);
  Rational sum{0};
  for (int i = t; i <= inst.subset_count(); ++i) sum += expectation_exact(inst, i);
  return sum;
}

SamePartition same_partition(const SubsetSelection& a, const SubsetSelection& b) {
  if (a.instance() != b.instance()) {
    throw std::domain_error("selections come from different instances");
  }
  SamePartition partition;
  for (std::size_t i = 0; i < a.extended().size(); ++i) {
    const auto& entry = a.extended()[i];
    if (entry.polarity == b.extended()[i].polarity) {
      partition.same.push_back(entry);
    } else {
      partition.no_same.push_back(entry);
    }
  }
  return partition;
}

Rational cross_moment(const Instance& inst, const SubsetSelection& a, const SubsetSelection& b) {
  if (a.instance() != inst || b.instance() != inst) {
    throw std::domain_error("selections come from a different instance");
  }
  if (a.indices() == b.indices()) {
    throw std::domain_error(
        "cross_moment requires distinct selections; the diagonal is the full-overlap "
        "second moment of the extended instance");
  }
  const std::int64_t n = inst.population();
  const SamePartition partition = same_partition(a, b);
  BigInt numerator{1};
  for (const auto& entry : partition.no_same) numerator *= entry.value * (n - entry.value);
  for (const auto& entry : partition.same) numerator *= entry.value * (entry.value - 1);
  if (numerator == 0) return Rational{0};
  return Rational(numerator, cross_moment_denominator(n, inst.subset_count()));
}

Rational second_moment_exact(const Instance& inst, int t) {
  check_level(inst, t);
  return pair_sum(inst, selections_of_level(inst, t));
}

Rational variance_exact(const Instance& inst, int t) {
  const Rational mean = expectation_exact(inst, t);
  return second_moment_exact(inst, t) - mean * mean;
}

Rational second_moment_at_least(const Instance& inst, int t) {
  check_level(inst, t);
  std::vector<SubsetSelection> selections;
  for (int level = t; level <= inst.subset_count(); ++level) {
    auto batch = selections_of_level(inst, level);
    std::move(batch.begin(), batch.end(), std::back_inserter(selections));
  }
  return pair_sum(inst, selections);
}

Rational variance_at_least(const Instance& inst, int t) {
  const Rational mean = expectation_at_least(inst, t);
  return second_moment_at_least(inst, t) - mean * mean;
}

MomentReport moment_report(const Instance& inst, int t, OverlapMode mode, int max_order) {
  check_level(inst, t);
  const bool full = t == inst.subset_count();  // x_{>=T} and x_T are the same variable
  if (max_order > 2 && !full) {
    throw std::domain_error("moments above order 2 are only available for the full overlap");
  }

  MomentReport report;
  if (full) {
    report.mean = expectation_full_overlap(inst);
    report.second_moment = raw_moment_full_overlap(inst, 2);
    report.variance = variance_full_overlap(inst);
    if (max_order > 2) {
      report.raw.reserve(static_cast<std::size_t>(max_order) + 1);
      report.central.reserve(static_cast<std::size_t>(max_order) + 1);
      for (int v = 0; v <= max_order; ++v) {
        report.raw.push_back(raw_moment_full_overlap(inst, v));
        report.central.push_back(central_moment_full_overlap(inst, v));
      }
    }
  } else if (mode == OverlapMode::ExactT) {
    report.mean = expectation_exact(inst, t);
    report.second_moment = second_moment_exact(inst, t);
    report.variance = report.second_moment - report.mean * report.mean;
  } else {
    report.mean = expectation_at_least(inst, t);
    report.second_moment = second_moment_at_least(inst, t);
    report.variance = report.second_moment - report.mean * report.mean;
  }
  return report;
}

}  // namespace ghgd
