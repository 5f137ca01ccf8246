#include <benchmark/benchmark.h>

#include "plift/barcode.hpp"
#include "plift/decompose.hpp"
#include "plift/fixtures.hpp"
#include "plift/hom.hpp"
#include "plift/witness.hpp"

namespace {

using namespace plift;

MatrixK random_square(const PrimeField& f, std::size_t n, std::uint64_t seed) {
  XorShift64Star rng(seed);
  MatrixK a(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rng.element(f);
  return a;
}

void BM_Rref(benchmark::State& state) {
  const PrimeField f(5);
  const MatrixK a = random_square(f, static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(rref(a));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(32)->Arg(96);

void BM_MinimalPolynomial(benchmark::State& state) {
  const PrimeField f(3);
  const MatrixK a = random_square(f, static_cast<std::size_t>(state.range(0)), 29);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_polynomial(a));
}
BENCHMARK(BM_MinimalPolynomial)->Arg(8)->Arg(32);

// Witness i of the default battery, reused so timings stay comparable.
const LiftWitness& witness(std::size_t i) {
  static std::vector<WitnessInstance> cache = [] {
    std::vector<WitnessInstance> v;
    for (std::size_t k = 0; k < 8; ++k) v.push_back(random_witness(kDefaultSeed, k));
    return v;
  }();
  return cache[i % cache.size()].witness;
}

void BM_HomBasisLift(benchmark::State& state) {
  const auto& w = witness(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(w.lift, w.lift));
}
BENCHMARK(BM_HomBasisLift)->DenseRange(0, 7);

void BM_DecomposeLift(benchmark::State& state) {
  const auto& w = witness(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(w.lift));
}
BENCHMARK(BM_DecomposeLift)->DenseRange(0, 7);

void BM_BarcodeA5(benchmark::State& state) {
  const auto m = fixture("a5_field").module("W");
  for (auto _ : state) benchmark::DoNotOptimize(barcode(m));
}
BENCHMARK(BM_BarcodeA5);

void BM_Battery(benchmark::State& state) {
  BatteryOptions opts;
  opts.count = 50;
  opts.jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_battery(opts));
}
BENCHMARK(BM_Battery)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
