#pragma once

#include <cstdint>
#include <vector>

namespace ghgd {

// Parameter tuple of the distribution: a population of n elements and T >= 2
// subset sizes m_1..m_T, each drawn uniformly without replacement. Subset
// indices are 1-based everywhere in the public API. m_i = 0 and m_i = n are
// both legal (they force degenerate overlap behaviour, not errors).
class Instance {
 public:
  Instance(std::int64_t population, std::vector<std::int64_t> sizes);

  std::int64_t population() const { return population_; }
  const std::vector<std::int64_t>& sizes() const { return sizes_; }
  int subset_count() const { return static_cast<int>(sizes_.size()); }

  // Size of subset `index`, 1-based.
  std::int64_t size_of(int index) const;

  std::int64_t min_size() const;
  std::int64_t size_sum() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::int64_t population_;
  std::vector<std::int64_t> sizes_;
};

}  // namespace ghgd
