#include <benchmark/benchmark.h>

#include <cstdint>

#include "jinf/automorphism.hpp"
#include "jinf/finite_graph.hpp"
#include "jinf/graph.hpp"
#include "jinf/periodic_set.hpp"
#include "jinf/permutation.hpp"
#include "jinf/reconstruction.hpp"

namespace {

using namespace jinf;

void BM_Canonicalize(benchmark::State& state) {
  const Bits prefix = {false, true, false, true};
  Bits period;
  for (int i = 0; i < 4; ++i) {
    period.push_back(false);
    period.push_back(true);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(PeriodicSet::fromBits(prefix, period));
  }
}
BENCHMARK(BM_Canonicalize);

void BM_BooleanOps(benchmark::State& state) {
  const PeriodicSet a = PeriodicSet::residueClass(12, 5);
  const PeriodicSet b = PeriodicSet::residueClass(18, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(unite(a, b), symmetricDiff(a, b)));
  }
}
BENCHMARK(BM_BooleanOps);

void BM_Pushforward(benchmark::State& state) {
  RandomPermutationConfig config;
  config.seed = 7;
  const ComputablePermutation s = randomPermutation(config);
  const PeriodicSet evens = PeriodicSet::evens();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pushforward(s, evens));
  }
}
BENCHMARK(BM_Pushforward);

void BM_JohnsonDistance(benchmark::State& state) {
  const Vertex x = Vertex::fromSet(PeriodicSet::evens());
  PeriodicSet moved = PeriodicSet::evens();
  for (std::uint64_t i = 0; i < 8; ++i) {
    moved = unite(subtract(moved, PeriodicSet::finite({2 + 2 * i})),
                  PeriodicSet::finite({1 + 2 * i}));
  }
  const Vertex y = Vertex::fromSet(moved);
  for (auto _ : state) {
    benchmark::DoNotOptimize(distanceJohnson(x, y));
  }
}
BENCHMARK(BM_JohnsonDistance);

void BM_KneserDistance(benchmark::State& state) {
  const Vertex x = Vertex::fromSet(PeriodicSet::evens());
  const Vertex y = Vertex::fromSet(
      unite(subtract(PeriodicSet::odds(), PeriodicSet::finite({1})), PeriodicSet::finite({2})));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kneserDistance(x, y));
  }
}
BENCHMARK(BM_KneserDistance);

void BM_AutGroupOrder(benchmark::State& state) {
  const FiniteGraph g = buildJohnsonFinite(5, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(autGroupOrder(g));
  }
}
BENCHMARK(BM_AutGroupOrder);

void BM_TruncatedBfs(benchmark::State& state) {
  const Vertex center = Vertex::fromSet(PeriodicSet::evens());
  for (auto _ : state) {
    const FiniteGraph g = buildTruncatedComponent(center, 10, 2);
    benchmark::DoNotOptimize(bfsAll(g, 0));
  }
}
BENCHMARK(BM_TruncatedBfs);

void BM_Exactify(benchmark::State& state) {
  RandomPermutationConfig config;
  config.seed = 11;
  const ComputablePermutation s = randomPermutation(config);
  for (auto _ : state) {
    const QueryBackedPermutation q([&s](std::uint64_t n) { return s.apply(n); });
    benchmark::DoNotOptimize(exactifyPermutation(q, ExactifySearch{}));
  }
}
BENCHMARK(BM_Exactify);

void BM_ReconstructComponentMap(benchmark::State& state) {
  RandomPermutationConfig config;
  config.seed = 13;
  const AutomorphismOracle f =
      makeOracle(RegularAutomorphism{randomPermutation(config), false});
  const Vertex base = Vertex::fromSet(PeriodicSet::evens());
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstructComponentMap(f, base));
  }
}
BENCHMARK(BM_ReconstructComponentMap);

}  // namespace

BENCHMARK_MAIN();
