#pragma once

#include <cstdint>
#include <vector>

#include "ghgd/distribution.hpp"
#include "ghgd/instance.hpp"
#include "ghgd/numeric.hpp"

namespace ghgd {

enum class Polarity { Direct, Complement };

// One entry of an extended size list: subset `index` taken directly (value
// m_i) or complemented (value n - m_i). Identity is structural: equality is
// (index, polarity), never the numeric value.
struct SignedSize {
  int index = 0;  // 1-based subset index
  Polarity polarity = Polarity::Direct;
  std::int64_t value = 0;

  friend bool operator==(const SignedSize& a, const SignedSize& b) {
    return a.index == b.index && a.polarity == b.polarity;
  }
};

// A t-subset of {1..T} with its extended size list: direct entries for the
// chosen indices, complement entries for the rest. Always exactly T entries,
// ordered by subset index. t = 0 (all complements) is legal.
class SubsetSelection {
 public:
  SubsetSelection(const Instance& inst, std::vector<int> indices);

  const Instance& instance() const { return instance_; }
  const std::vector<int>& indices() const { return indices_; }  // sorted, 1-based
  const std::vector<SignedSize>& extended() const { return extended_; }
  int level() const { return static_cast<int>(indices_.size()); }
  std::vector<std::int64_t> extended_values() const;

  friend bool operator==(const SubsetSelection&, const SubsetSelection&) = default;

 private:
  Instance instance_;
  std::vector<int> indices_;
  std::vector<SignedSize> extended_;
};

// Structural partition of two extended lists: `same` holds the entries where
// both selections impose the same polarity at the same index, `no_same` the
// remaining entries of the first list. |same| + |no_same| = T.
struct SamePartition {
  std::vector<SignedSize> same;
  std::vector<SignedSize> no_same;
};

struct MomentReport {
  Rational mean;
  Rational second_moment;
  Rational variance;
  // E(x^i) and central moments for i = 0..max_order, filled when a report is
  // requested with max_order > 2 (full-overlap variable only).
  std::vector<Rational> raw;
  std::vector<Rational> central;
};

// --- fully-overlapped variable x_T ---

// E(x_T) = prod_i m_i / n^(T-1).
Rational expectation_full_overlap(const Instance& inst);

// E(x_T^v) by the downward-shift recursion
//   E(x_T^v) = E(x_T) * sum_{i=0}^{v-1} C(v-1, i) * E(x_T^i | n-1, M-1)
// with E(x_T^0) = 1. A shift that zeroes any size terminates the branch.
Rational raw_moment_full_overlap(const Instance& inst, int order);

// E((x_T - E(x_T))^v) via the binomial expansion over raw moments.
Rational central_moment_full_overlap(const Instance& inst, int order);

// Var(x_T) = E(x_T) * (1 + E(x_T | n-1, M-1) - E(x_T)).
Rational variance_full_overlap(const Instance& inst);

// --- general overlap level t ---

// Extended size list of a t-subset of {1..T}. Duplicate or out-of-range
// indices are a domain error.
SubsetSelection extended_sizes(const Instance& inst, const std::vector<int>& indices);

// E(x_t): sum over all C(T,t) selections of the full-overlap expectation of
// the extended instance.
Rational expectation_exact(const Instance& inst, int t);

// Equal-size specialization: C(T,t) * (n-m)^(T-t) * m^t / n^(T-1).
Rational expectation_equal_sizes(std::int64_t population, std::int64_t size, int subsets, int t);

// E(x_{>=t}) = sum_{i=t}^{T} E(x_i).
Rational expectation_at_least(const Instance& inst, int t);

// Structural same/no-same split of two selections over the same instance.
SamePartition same_partition(const SubsetSelection& a, const SubsetSelection& b);

// E(x_a * x_b) for two DISTINCT selections:
//   prod_{no_same} v*(n-v) * prod_{same} v*(v-1) / (n^(T-1) * (n-1)^(T-1)).
// a == b is a domain error; the diagonal belongs to the second-moment sums.
Rational cross_moment(const Instance& inst, const SubsetSelection& a, const SubsetSelection& b);

// E(x_t^2): sum over ordered pairs of t-selections, cross_moment off the
// diagonal, full-overlap second moment of the extended instance on it.
Rational second_moment_exact(const Instance& inst, int t);
Rational variance_exact(const Instance& inst, int t);

// Same double sum with both selection sizes ranging over [t, T].
Rational second_moment_at_least(const Instance& inst, int t);
Rational variance_at_least(const Instance& inst, int t);

// Mean / second moment / variance for (t, mode); raw and central moments up
// to max_order when the variable is the full overlap (t == T). max_order > 2
// for t < T is a domain error: no closed form exists below full overlap.
MomentReport moment_report(const Instance& inst, int t, OverlapMode mode, int max_order = 2);

}  // namespace ghgd
