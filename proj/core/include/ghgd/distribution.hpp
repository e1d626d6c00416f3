#pragma once

#include <cstdint>
#include <vector>

#include "ghgd/numeric.hpp"

namespace ghgd {

// Which overlap variable a quantity refers to.
enum class VariableKind { FullOverlap, ExactT, AtLeastT };

// Exact-t vs at-least-t, for operations parameterized on the overlap level.
enum class OverlapMode { ExactT, AtLeastT };

VariableKind to_variable_kind(OverlapMode mode);

// Exact pmf over the support k = 0..k_max. probs sum to exactly 1.
struct DistributionTable {
  VariableKind kind = VariableKind::FullOverlap;
  int t = 0;
  std::vector<Rational> probs;  // probs[k]

  std::int64_t k_max() const { return static_cast<std::int64_t>(probs.size()) - 1; }

  // Total function: 0 outside the support.
  const Rational& prob(std::int64_t k) const;

  Rational mean() const;
  Rational raw_moment(int order) const;
  Rational central_moment(int order) const;
  Rational variance() const;

  // P(x >= k); 1 for k <= 0.
  Rational tail_at_least(std::int64_t k) const;
};

// Value equality of two pmfs, ignoring kind/t and zero padding beyond either
// support. This is the comparison the formula-vs-oracle checks use.
bool same_pmf(const DistributionTable& a, const DistributionTable& b);

}  // namespace ghgd
