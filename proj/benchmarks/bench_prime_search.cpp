#include <benchmark/benchmark.h>

#include "semirank/semirank.hpp"

using namespace semirank;

static void BM_BrandtSearch(benchmark::State& state) {
  auto const b = brandt(symmetric_group(3), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(smallest_proper_prime_subset(b.semigroup));
  }
  state.counters["m"] = static_cast<double>(b.semigroup.order());
}
BENCHMARK(BM_BrandtSearch)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_OrderPreservingSearch(benchmark::State& state) {
  auto const on = order_preserving_singular(static_cast<std::size_t>(state.range(0)));
  SearchOptions opts;
  opts.matching_lower_bound = state.range(1) != 0;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    auto const r = smallest_proper_prime_subset(on.semigroup, opts);
    nodes = r.nodes_visited;
    benchmark::DoNotOptimize(r.size);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_OrderPreservingSearch)
    ->ArgsProduct({{4, 5, 6}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

static void BM_BuildOrderPreserving(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(order_preserving_singular(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_BuildOrderPreserving)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_Associativity(benchmark::State& state) {
  auto const s = order_preserving_singular(static_cast<std::size_t>(state.range(0))).semigroup;
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_associativity(s.order(), s.table()));
  }
}
BENCHMARK(BM_Associativity)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
