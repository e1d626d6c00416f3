#include <doctest.h>

#include <algorithm>
#include <random>

#include "ghgd/combinatorics.hpp"

using ghgd::BigInt;
using ghgd::Instance;
using ghgd::Rational;

namespace {

Instance random_instance(std::mt19937& rng, std::int64_t max_n, int max_subsets,
                         std::int64_t min_m = 0) {
  std::uniform_int_distribution<std::int64_t> pick_n(std::max<std::int64_t>(1, min_m), max_n);
  const std::int64_t n = pick_n(rng);
  std::uniform_int_distribution<int> pick_t(2, max_subsets);
  std::uniform_int_distribution<std::int64_t> pick_m(min_m, n);
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(pick_t(rng)));
  for (auto& m : sizes) m = pick_m(rng);
  return Instance(n, sizes);
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(ghgd::binomial(5, 2) == 10);
  CHECK(ghgd::binomial(3, 5) == 0);
  CHECK(ghgd::binomial(7, 0) == 1);
  CHECK(ghgd::binomial(0, 0) == 1);
  CHECK(ghgd::binomial(5, -1) == 0);
  CHECK(ghgd::binomial(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK_THROWS_AS(ghgd::binomial(-1, 0), std::domain_error);
}

TEST_CASE("binomial Pascal identity and symmetry") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::int64_t> pick_m(1, 80);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t m = pick_m(rng);
    std::uniform_int_distribution<std::int64_t> pick_k(0, m);
    const std::int64_t k = pick_k(rng);
    CHECK(ghgd::binomial(m, k) == ghgd::binomial(m, m - k));
    if (k >= 1) {
      CHECK(ghgd::binomial(m, k) == ghgd::binomial(m - 1, k - 1) + ghgd::binomial(m - 1, k));
    }
  }
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(0, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(4, {2}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(4, {2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(4, {2, -1}), std::invalid_argument);
  const Instance ok(4, {0, 4});
  CHECK(ok.min_size() == 0);
  CHECK(ok.size_sum() == 4);
  CHECK(ok.size_of(2) == 4);
}

TEST_CASE("total_configurations") {
  CHECK(ghgd::total_configurations(Instance(4, {2, 2})) == 36);
  CHECK(ghgd::total_configurations(Instance(3, {3, 3, 3})) == 1);
  CHECK(ghgd::total_configurations(Instance(5, {1, 2})) == 50);
}

TEST_CASE("count_full_overlap on the 36-configuration instance") {
  const Instance inst(4, {2, 2});
  CHECK(ghgd::count_full_overlap(inst, 0) == 6);
  CHECK(ghgd::count_full_overlap(inst, 1) == 24);
  CHECK(ghgd::count_full_overlap(inst, 2) == 6);
  CHECK(ghgd::count_full_overlap(inst, 3) == 0);  // impossible, not an error
  CHECK_THROWS_AS(ghgd::count_full_overlap(inst, -1), std::domain_error);
}

TEST_CASE("pmf_full_overlap examples") {
  const auto table = ghgd::pmf_full_overlap(Instance(4, {2, 2}));
  REQUIRE(table.k_max() == 2);
  CHECK(table.prob(0) == Rational(1, 6));
  CHECK(table.prob(1) == Rational(2, 3));
  CHECK(table.prob(2) == Rational(1, 6));
  CHECK(table.kind == ghgd::VariableKind::FullOverlap);

  const auto degenerate = ghgd::pmf_full_overlap(Instance(5, {5, 5}));
  REQUIRE(degenerate.k_max() == 5);
  CHECK(degenerate.prob(5) == 1);
  CHECK(degenerate.prob(4) == 0);

  // any m_i = 0 pins the full overlap at 0
  const auto zero = ghgd::pmf_full_overlap(Instance(5, {0, 3}));
  REQUIRE(zero.k_max() == 0);
  CHECK(zero.prob(0) == 1);
}

TEST_CASE("pmf sums to exactly 1 and counts sum to the total") {
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    const Instance inst = random_instance(rng, 8, 4);
    const auto table = ghgd::pmf_full_overlap(inst);
    Rational sum{0};
    for (std::int64_t k = 0; k <= table.k_max(); ++k) sum += table.prob(k);
    CHECK(sum == 1);

    const auto counts = ghgd::full_overlap_counts(inst);
    BigInt count_sum{0};
    for (const auto& c : *counts) count_sum += c;
    CHECK(count_sum == ghgd::total_configurations(inst));
  }
}

TEST_CASE("downward-shift count identity") {
  // i * C(x_T = i | n, M) == n * C(x_T = i-1 | n-1, M-1)
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    const Instance inst = random_instance(rng, 8, 4, 1);
    if (inst.population() < 2) continue;
    std::vector<std::int64_t> shifted = inst.sizes();
    for (auto& m : shifted) --m;
    const Instance smaller(inst.population() - 1, shifted);
    for (std::int64_t k = 1; k <= inst.min_size(); ++k) {
      CHECK(k * ghgd::count_full_overlap(inst, k) ==
            inst.population() * ghgd::count_full_overlap(smaller, k - 1));
    }
  }
}

TEST_CASE("T = 2 reduces to the classical hypergeometric pmf") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const Instance inst = random_instance(rng, 12, 2);
    const std::int64_t n = inst.population();
    const std::int64_t m1 = inst.size_of(1);
    const std::int64_t m2 = inst.size_of(2);
    const auto table = ghgd::pmf_full_overlap(inst);
    for (std::int64_t k = 0; k <= table.k_max(); ++k) {
      const Rational classical(ghgd::binomial(m1, k) * ghgd::binomial(n - m1, m2 - k),
                               ghgd::binomial(n, m2));
      CHECK(table.prob(k) == classical);
    }
  }
}

TEST_CASE("counts are symmetric under permutation of the sizes") {
  const Instance a(6, {2, 4, 3});
  const Instance b(6, {4, 3, 2});
  for (std::int64_t k = 0; k <= 2; ++k) {
    CHECK(ghgd::count_full_overlap(a, k) == ghgd::count_full_overlap(b, k));
  }
  // the cache canonicalizes on sorted sizes, so both resolve to one entry
  CHECK(ghgd::full_overlap_counts(a) == ghgd::full_overlap_counts(b));
}
