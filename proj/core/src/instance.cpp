#include "ghgd/instance.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ghgd {

Instance::Instance(std::int64_t population, std::vector<std::int64_t> sizes)
    : population_(population), sizes_(std::move(sizes)) {
  if (population_ < 1) {
    throw std::invalid_argument("population must be positive, got " + std::to_string(population_));
  }
  if (sizes_.size() < 2) {
    throw std::invalid_argument("need at least 2 subsets, got " + std::to_string(sizes_.size()));
  }
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] < 0 || sizes_[i] > population_) {
      throw std::invalid_argument("m[" + std::to_string(i + 1) + "] = " +
                                  std::to_string(sizes_[i]) + " out of range [0, n = " +
                                  std::to_string(population_) + "]");
    }
  }
}

std::int64_t Instance::size_of(int index) const {
  if (index < 1 || index > subset_count()) {
    throw std::out_of_range("subset index " + std::to_string(index) + " not in 1.." +
                            std::to_string(subset_count()));
  }
  return sizes_[static_cast<std::size_t>(index - 1)];
}

std::int64_t Instance::min_size() const {
  std::int64_t m = sizes_[0];
  for (const auto s : sizes_) m = std::min(m, s);
  return m;
}

std::int64_t Instance::size_sum() const {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::int64_t{0});
}

}  // namespace ghgd
