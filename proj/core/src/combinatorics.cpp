#include "ghgd/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace ghgd {

namespace {

// (n, sorted sizes) -> counts vector. Cleared wholesale when it grows past
// kMaxCacheEntries.
constexpr std::size_t kMaxCacheEntries = 256;
std::mutex g_cache_mutex;
std::map<std::pair<std::int64_t, std::vector<std::int64_t>>,
         std::shared_ptr<const std::vector<BigInt>>>
    g_counts_cache;

std::vector<BigInt> compute_full_overlap_counts(const Instance& inst) {
  const std::int64_t n = inst.population();
  const std::int64_t m_min = inst.min_size();
  std::vector<BigInt> counts(static_cast<std::size_t>(m_min) + 1);
  for (std::int64_t k = m_min; k >= 0; --k) {
    BigInt direct = binomial(n, k);
    for (const auto m : inst.sizes()) direct *= binomial(n - k, m - k);
    BigInt overcount{0};
    for (std::int64_t i = k + 1; i <= m_min; ++i) {
      overcount += binomial(i, k) * counts[static_cast<std::size_t>(i)];
    }
    counts[static_cast<std::size_t>(k)] = direct - overcount;
  }
  return counts;
}

}  // namespace

BigInt binomial(std::int64_t m, std::int64_t k) {
  if (m < 0) throw std::domain_error("binomial: m must be >= 0, got " + std::to_string(m));
  if (k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  // prod (m-i)/(i+1); each prefix product of consecutive integers divides
  // exactly, so the division is always exact.
  BigInt result{1};
  for (std::int64_t i = 0; i < k; ++i) {
    result *= m - i;
    result /= i + 1;
  }
  return result;
}

BigInt total_configurations(const Instance& inst) {
  BigInt total{1};
  for (const auto m : inst.sizes()) total *= binomial(inst.population(), m);
  return total;
}

std::shared_ptr<const std::vector<BigInt>> full_overlap_counts(const Instance& inst) {
  std::vector<std::int64_t> sorted_sizes = inst.sizes();
  std::sort(sorted_sizes.begin(), sorted_sizes.end());
  const auto key = std::make_pair(inst.population(), std::move(sorted_sizes));

  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_counts_cache.find(key); it != g_counts_cache.end()) return it->second;
  }
  auto counts = std::make_shared<const std::vector<BigInt>>(compute_full_overlap_counts(inst));
  std::lock_guard lock(g_cache_mutex);
  if (g_counts_cache.size() >= kMaxCacheEntries) g_counts_cache.clear();
  auto [it, inserted] = g_counts_cache.emplace(key, std::move(counts));
  return it->second;  // first writer wins; recomputation is idempotent
}

BigInt count_full_overlap(const Instance& inst, std::int64_t k) {
  if (k < 0) throw std::domain_error("count_full_overlap: k must be >= 0, got " + std::to_string(k));
  if (k > inst.min_size()) return 0;
  return (*full_overlap_counts(inst))[static_cast<std::size_t>(k)];
}

DistributionTable pmf_full_overlap(const Instance& inst) {
  const auto counts = full_overlap_counts(inst);
  const BigInt total = total_configurations(inst);

  BigInt sum{0};
  for (const auto& c : *counts) sum += c;
  if (sum != total) {
    throw std::logic_error("full-overlap counts do not sum to the configuration total");
  }

  DistributionTable table;
  table.kind = VariableKind::FullOverlap;
  table.t = inst.subset_count();
  table.probs.reserve(counts->size());
  for (const auto& c : *counts) table.probs.emplace_back(c, total);
  return table;
}

}  // namespace ghgd
