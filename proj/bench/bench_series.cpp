#include <benchmark/benchmark.h>

#include <random>

#include "lawson/series.hpp"

namespace {

lawson::TruncatedBiSeries dense_series(std::int64_t max_d, std::uint64_t seed) {
  lawson::TruncatedBiSeries s(4 * max_d, max_d);
  std::mt19937_64 rng(seed);
  for (std::int64_t b = 0; b <= max_d; ++b) {
    for (std::int64_t a = 0; a <= 4 * max_d; ++a) s.coefficient(a, b) = rng() % 1000;
  }
  return s;
}

void BM_SeriesMulParallel(benchmark::State& state) {
  const auto a = dense_series(state.range(0), 1);
  const auto b = dense_series(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(lawson::series_mul(a, b));
}

void BM_SeriesMulSerial(benchmark::State& state) {
  const auto a = dense_series(state.range(0), 1);
  const auto b = dense_series(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(lawson::series_mul_serial(a, b));
}

// the full Cheah product, dominated by repeated series_mul
void BM_CheahSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lawson::cheah_series(2, state.range(0)));
}

}  // namespace

BENCHMARK(BM_SeriesMulParallel)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesMulSerial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheahSeries)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
