#include <benchmark/benchmark.h>

#include <vector>

#include "ise/alias.hpp"

namespace {

std::vector<double> random_weights(size_t n, std::uint64_t seed) {
  ise::Rng rng(seed);
  std::vector<double> w(n);
  for (auto& v : w) v = rng.uniform() * 100.0 + 0.01;
  return w;
}

void BM_AliasConstruct(benchmark::State& state) {
  auto weights = random_weights(static_cast<size_t>(state.range(0)), 1);
  for (auto _ : state) {
    ise::AliasTable table{weights};
    benchmark::DoNotOptimize(table.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AliasConstruct)->Arg(1000)->Arg(100000)->Arg(1000000);

void BM_AliasSample(benchmark::State& state) {
  auto weights = random_weights(static_cast<size_t>(state.range(0)), 2);
  ise::AliasTable table{weights};
  ise::Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(table.sample(rng));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_AliasSample)->Arg(1000)->Arg(1000000);

void BM_NoiseTable(benchmark::State& state) {
  std::vector<std::int64_t> freqs(static_cast<size_t>(state.range(0)));
  ise::Rng rng(4);
  for (auto& f : freqs) f = 1 + static_cast<std::int64_t>(rng.uniform_int(10000));
  for (auto _ : state) {
    auto table = ise::build_noise_table(freqs);
    benchmark::DoNotOptimize(table.size());
  }
}
BENCHMARK(BM_NoiseTable)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
