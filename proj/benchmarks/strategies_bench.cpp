#include <benchmark/benchmark.h>

#include "hyperseq/sequence.hpp"
#include "hyperseq/tiling.hpp"

namespace {

using hyperseq::Generation;
using hyperseq::SeqIndex;

// Args: {r, n}
void StrategyArgs(benchmark::internal::Benchmark* b) {
  for (int r : {1, 4, 8}) {
    for (int n : {100, 1000, 10000}) b->Args({r, n});
  }
}

void BM_Cumsum(benchmark::State& state) {
  const auto r = static_cast<Generation>(state.range(0));
  const auto n = static_cast<SeqIndex>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hyperseq::hyper_fib_cumsum(r, n));
}
BENCHMARK(BM_Cumsum)->Apply(StrategyArgs);

void BM_Rec(benchmark::State& state) {
  const auto r = static_cast<Generation>(state.range(0));
  const auto n = static_cast<SeqIndex>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hyperseq::hyper_fib_rec(r, n));
}
BENCHMARK(BM_Rec)->Apply(StrategyArgs);

void BM_PolyRec(benchmark::State& state) {
  const auto r = static_cast<Generation>(state.range(0));
  const auto n = static_cast<SeqIndex>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hyperseq::hyper_fib_poly_rec(r, n));
}
BENCHMARK(BM_PolyRec)->Apply(StrategyArgs);

void BM_Closed(benchmark::State& state) {
  const auto r = static_cast<Generation>(state.range(0));
  const auto n = static_cast<SeqIndex>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hyperseq::hyper_fib_closed(r, n));
}
BENCHMARK(BM_Closed)->Apply(StrategyArgs);

void BM_BinomSum(benchmark::State& state) {
  const auto r = static_cast<Generation>(state.range(0));
  const auto n = static_cast<SeqIndex>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hyperseq::hyper_fib_binom_sum(r, n));
}
BENCHMARK(BM_BinomSum)->Apply(StrategyArgs);

void BM_FibFastDoubling(benchmark::State& state) {
  const auto n = static_cast<SeqIndex>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyperseq::fib(n));
}
BENCHMARK(BM_FibFastDoubling)->RangeMultiplier(10)->Range(100, 1000000);

void BM_FibLinearRow(benchmark::State& state) {
  const auto n = static_cast<SeqIndex>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyperseq::fib_row(n).back());
}
BENCHMARK(BM_FibLinearRow)->RangeMultiplier(10)->Range(100, 100000);

void BM_EnumerateBoard(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyperseq::enumerate_board_count(m, 0));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(hyperseq::enumerate_board_count(m, 0)));
}
BENCHMARK(BM_EnumerateBoard)->DenseRange(10, 22, 4);

}  // namespace

BENCHMARK_MAIN();
