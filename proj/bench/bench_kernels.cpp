#include <benchmark/benchmark.h>
#include <omp.h>

#include "indsieve/census.hpp"
#include "indsieve/generate.hpp"
#include "indsieve/named.hpp"
#include "indsieve/oracle.hpp"
#include "indsieve/sieve.hpp"

using namespace indsieve;

namespace {

const Graph& hoffman_singleton() {
  static const Graph g = build_named({named::HoffmanSingleton{}});
  return g;
}

const Graph& sparse40() {
  static const Graph g = [] {
    SamplingOptions options;
    options.n_min = 40;
    options.n_max = 40;
    options.samples = 1;
    options.seed = 1;
    options.model = RandomModel::RegularPairing;
    options.degree = 4;
    return *sample_random_graphs(options)();
  }();
  return g;
}

void set_threads(const benchmark::State& state) { omp_set_num_threads(static_cast<int>(state.range(0))); }

void BM_SieveParallel(benchmark::State& state) {
  set_threads(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sieve_coefficients_enumerated(sparse40(), 6));
  }
}

void BM_SieveSerialReference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sieve_coefficients_reference(sparse40(), 6));
  }
}

void BM_CensusParallel(benchmark::State& state) {
  set_threads(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_census(hoffman_singleton(), 5));
  }
}

void BM_CensusSerialReference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_census_reference(hoffman_singleton(), 5));
  }
}

void BM_BruteForceParallel(benchmark::State& state) {
  set_threads(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_force_it(hoffman_singleton(), 5));
  }
}

void BM_BruteForceSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_force_it_serial(hoffman_singleton(), 5));
  }
}

}  // namespace

BENCHMARK(BM_SieveParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveSerialReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerialReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
