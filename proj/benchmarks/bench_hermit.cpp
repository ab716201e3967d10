#include <benchmark/benchmark.h>

#include <random>

#include "hermit/census.hpp"
#include "hermit/hermcodes.hpp"
#include "hermit/linalg.hpp"
#include "hermit/weights.hpp"

namespace {

hermit::Field field_of(std::int64_t q) {
  const auto [p, e] = hermit::prime_power(static_cast<std::uint64_t>(q));
  return hermit::Field::build(p, e);
}

void BM_FieldMul(benchmark::State& state) {
  const auto f = field_of(state.range(0));
  std::vector<hermit::Elem> xs(4096);
  std::mt19937 gen(7);
  for (auto& x : xs) x = hermit::Elem{static_cast<std::uint32_t>(gen() % f.q2())};
  hermit::Elem acc = f.one();
  for (auto _ : state) {
    for (const auto& x : xs) acc = f.add(f.mul(acc, x), x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(9)->Arg(64);

void BM_ParabolaCensusBrute(benchmark::State& state) {
  const auto f = field_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hermit::parabola_census_brute(f, 1));
}
BENCHMARK(BM_ParabolaCensusBrute)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ParabolaCensusFormula(benchmark::State& state) {
  const auto f = field_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hermit::parabola_census_formula(f));
}
BENCHMARK(BM_ParabolaCensusFormula)->Arg(5)->Arg(9)->Arg(16);

// args: q, d, j, w
void BM_Oracle(benchmark::State& state) {
  const auto f = field_of(state.range(0));
  const hermit::HermitianCurve curve(f);
  const hermit::CornerEdge spec{static_cast<int>(state.range(1)), static_cast<int>(state.range(2))};
  hermit::OracleOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(hermit::oracle_count(curve, spec, static_cast<int>(state.range(3)),
                                                                     hermit::Filter::All, opts));
}
BENCHMARK(BM_Oracle)->Args({3, 3, 0, 4})->Args({4, 3, 1, 4})->Args({4, 4, 0, 5})->Unit(benchmark::kMillisecond);

void BM_FullSupportKernel(benchmark::State& state) {
  const auto f = field_of(4);
  const hermit::HermitianCurve curve(f);
  const auto h = hermit::build_parity_check(curve, hermit::CornerEdge{3, 0});
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < static_cast<std::size_t>(state.range(0)); ++c) cols.push_back(c * 3);
  const auto sub = h.select_columns(cols);
  for (auto _ : state) benchmark::DoNotOptimize(hermit::count_full_support_kernel(sub));
}
BENCHMARK(BM_FullSupportKernel)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
