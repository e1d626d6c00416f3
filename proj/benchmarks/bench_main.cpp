#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "ghgd/combinatorics.hpp"
#include "ghgd/moments.hpp"
#include "ghgd/oracle.hpp"

using ghgd::Instance;

namespace {

static void BM_Binomial(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ghgd::binomial(n, n / 2));
  }
}
BENCHMARK(BM_Binomial)->Arg(64)->Arg(256)->Arg(1024);

// Cycle distinct instances so the counts cache cannot short-circuit the
// recursion being measured.
static void BM_PmfRecursion(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::vector<Instance> pool;
  for (std::int64_t k = 1; k <= n; ++k) pool.emplace_back(n, std::vector<std::int64_t>{n / 2, n / 2, k});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ghgd::pmf_full_overlap(pool[i]));
    i = (i + 1) % pool.size();
  }
}
BENCHMARK(BM_PmfRecursion)->Arg(16)->Arg(64)->Arg(256);

// The same distribution by exhaustive enumeration; compare against
// BM_PmfRecursion/16 for the formula-vs-enumeration gap (the oracle is
// already infeasible at the sizes the recursion handles in microseconds).
static void BM_PmfByEnumeration(benchmark::State& state) {
  const Instance inst(static_cast<std::int64_t>(state.range(0)), {3, 3, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ghgd::enumerate_distribution(inst, 3, ghgd::OverlapMode::ExactT));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(ghgd::total_configurations(inst)));
}
BENCHMARK(BM_PmfByEnumeration)->Arg(6)->Arg(8)->Arg(10);

static void BM_VarianceExact(benchmark::State& state) {
  const int subsets = static_cast<int>(state.range(0));
  const Instance inst(100, std::vector<std::int64_t>(static_cast<std::size_t>(subsets), 40));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ghgd::variance_exact(inst, subsets / 2));
  }
}
BENCHMARK(BM_VarianceExact)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

static void BM_VarianceAtLeast(benchmark::State& state) {
  const int subsets = static_cast<int>(state.range(0));
  const Instance inst(100, std::vector<std::int64_t>(static_cast<std::size_t>(subsets), 40));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ghgd::variance_at_least(inst, 1));
  }
}
BENCHMARK(BM_VarianceAtLeast)->Arg(4)->Arg(6)->Arg(8);

static void BM_RawMomentFullOverlap(benchmark::State& state) {
  const Instance inst(1000, {400, 500, 600});
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ghgd::raw_moment_full_overlap(inst, order));
  }
}
BENCHMARK(BM_RawMomentFullOverlap)->Arg(2)->Arg(8)->Arg(16);

static void BM_Simulate(benchmark::State& state) {
  const Instance inst(100, {30, 40, 50});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ghgd::simulate(inst, 3, ghgd::OverlapMode::ExactT, state.range(0), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
