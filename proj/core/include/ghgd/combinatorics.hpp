#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ghgd/distribution.hpp"
#include "ghgd/instance.hpp"
#include "ghgd/numeric.hpp"

namespace ghgd {

// Binomial coefficient m over k. Total on m >= 0: returns 0 when k < 0 or
// k > m. Exact for any size.
BigInt binomial(std::int64_t m, std::int64_t k);

// Number of distinct configurations of the T subsets: prod_i C(n, m_i).
BigInt total_configurations(const Instance& inst);

// Configuration counts C(x_T = k) of the fully-overlapped variable for
// k = 0..min_size, computed in a single downward pass of
//
//   C(x_T = k) = C(n,k) * prod_i C(n-k, m_i-k) - sum_{i=k+1}^{m_min} C(i,k) * C(x_T = i)
//
// and cached keyed by (n, sorted sizes); every formula here is permutation
// symmetric. The cache fill is idempotent and thread-safe.
std::shared_ptr<const std::vector<BigInt>> full_overlap_counts(const Instance& inst);

// C(x_T = k): the k-th entry of the vector above. k > min_size is a valid
// impossible event (0); k < 0 is a domain error.
BigInt count_full_overlap(const Instance& inst, std::int64_t k);

// Exact pmf of x_T over k = 0..min_size. Entries sum to exactly 1.
DistributionTable pmf_full_overlap(const Instance& inst);

}  // namespace ghgd
