#include <benchmark/benchmark.h>

#include <random>

#include "intrep/invariants.hpp"
#include "intrep/io.hpp"
#include "intrep/replacement.hpp"

using namespace intrep;
using QF = RationalField;

static void BM_EnumerateIntervals(benchmark::State& state) {
  auto G = std::make_shared<const Poset>(
      Poset::grid({static_cast<int>(state.range(0)), 2}));
  for (auto _ : state) {
    auto L = IntervalLattice::enumerate(G);
    benchmark::DoNotOptimize(L.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateIntervals)->DenseRange(3, 9, 2)->Complexity();

static void BM_RankRational(benchmark::State& state) {
  std::mt19937_64 rng(1);
  QF q;
  const int n = static_cast<int>(state.range(0));
  Matrix<QF> A(q, n, n);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A.at(i, j) = q.from_int(entry(rng));
  for (auto _ : state) benchmark::DoNotOptimize(rank(A));
}
BENCHMARK(BM_RankRational)->RangeMultiplier(2)->Range(8, 64);

static void BM_RankPrime(benchmark::State& state) {
  std::mt19937_64 rng(1);
  PrimeField f(2147483647);
  const int n = static_cast<int>(state.range(0));
  Matrix<PrimeField> A(f, n, n);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A.at(i, j) = f.from_int(entry(rng));
  for (auto _ : state) benchmark::DoNotOptimize(rank(A));
}
BENCHMARK(BM_RankPrime)->RangeMultiplier(2)->Range(8, 64);

static void BM_InvariantTable(benchmark::State& state) {
  auto any = load_module_json(fixture_json("g52-lambda2"), std::nullopt);
  auto& M = std::get<PersistenceModule<QF>>(any);
  auto L = IntervalLattice::enumerate(M.poset_ptr());
  std::vector<CompressionSystem> systems{CompressionSystem::total(),
                                         CompressionSystem::source_sink(),
                                         CompressionSystem::zigzag()};
  const auto& sys = systems[static_cast<std::size_t>(state.range(0))];
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto t = invariant_table(M, sys, L, jobs);
    benchmark::DoNotOptimize(t.values.data());
  }
  state.SetLabel(sys.name() + "/jobs=" + std::to_string(jobs));
}
BENCHMARK(BM_InvariantTable)
    ->ArgsProduct({{0, 1, 2}, {1, 4}});

static void BM_GeneralizedRank(benchmark::State& state) {
  auto any = load_module_json(fixture_json("g52-tau"), std::nullopt);
  auto& M = std::get<PersistenceModule<QF>>(any);
  auto L = IntervalLattice::enumerate(M.poset_ptr());
  for (auto _ : state) {
    long acc = 0;
    for (std::size_t i = 0; i < L.size(); ++i)
      acc += generalized_rank(M, L[i]);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_GeneralizedRank);

static void BM_SignedMultiplicity(benchmark::State& state) {
  auto any = load_module_json(fixture_json("g52-lambda2"), std::nullopt);
  auto& M = std::get<PersistenceModule<QF>>(any);
  auto L = IntervalLattice::enumerate(M.poset_ptr());
  auto table = invariant_table(M, CompressionSystem::total(), L);
  for (auto _ : state) {
    auto d = signed_multiplicity(table, L);
    benchmark::DoNotOptimize(d.values.data());
  }
}
BENCHMARK(BM_SignedMultiplicity);

BENCHMARK_MAIN();
