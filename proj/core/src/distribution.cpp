#include "ghgd/distribution.hpp"

#include <stdexcept>

namespace ghgd {

VariableKind to_variable_kind(OverlapMode mode) {
  return mode == OverlapMode::ExactT ? VariableKind::ExactT : VariableKind::AtLeastT;
}

const Rational& DistributionTable::prob(std::int64_t k) const {
  static const Rational zero{0};
  if (k < 0 || k > k_max()) return zero;
  return probs[static_cast<std::size_t>(k)];
}

Rational DistributionTable::mean() const { return raw_moment(1); }

Rational DistributionTable::raw_moment(int order) const {
  if (order < 0) throw std::domain_error("moment order must be >= 0");
  Rational sum{0};
  for (std::size_t k = 0; k < probs.size(); ++k) {
    sum += ipow(BigInt(k), static_cast<std::uint64_t>(order)) * probs[k];
  }
  return sum;
}

Rational DistributionTable::central_moment(int order) const {
  if (order < 0) throw std::domain_error("moment order must be >= 0");
  const Rational mu = mean();
  Rational sum{0};
  for (std::size_t k = 0; k < probs.size(); ++k) {
    Rational dev = Rational(BigInt(k)) - mu;
    Rational power{1};
    for (int i = 0; i < order; ++i) power *= dev;
    sum += power * probs[k];
  }
  return sum;
}

Rational DistributionTable::variance() const { return raw_moment(2) - mean() * mean(); }

Rational DistributionTable::tail_at_least(std::int64_t k) const {
  if (k <= 0) return Rational{1};
  Rational sum{0};
  for (std::int64_t j = k; j <= k_max(); ++j) sum += prob(j);
  return sum;
}

bool same_pmf(const DistributionTable& a, const DistributionTable& b) {
  const std::int64_t hi = std::max(a.k_max(), b.k_max());
  for (std::int64_t k = 0; k <= hi; ++k) {
    if (a.prob(k) != b.prob(k)) return false;
  }
  return true;
}

}  // namespace ghgd
