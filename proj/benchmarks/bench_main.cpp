#include <benchmark/benchmark.h>

#include "belyi/bounds.hpp"
#include "belyi/dessins.hpp"
#include "belyi/hat.hpp"
#include "belyi/heights.hpp"
#include "belyi/parse.hpp"
#include "belyi/pipeline.hpp"
#include "belyi/resultant.hpp"

using namespace belyi;

namespace {

QPoly sample_poly(int deg, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Rational> c;
  for (int i = 0; i < deg; ++i) c.emplace_back(rng.range(-10, 10));
  c.emplace_back(1);
  return QPoly(QQ{}, std::move(c));
}

void BM_HatResultant(benchmark::State& st) {
  QPoly f = sample_poly(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(hat(f));
}
BENCHMARK(BM_HatResultant)->DenseRange(4, 16, 4);

void BM_HatCharPoly(benchmark::State& st) {
  QPoly f = sample_poly(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(hat(f, HatRoute::kCharPoly));
}
BENCHMARK(BM_HatCharPoly)->DenseRange(4, 16, 4);

void BM_Resultant(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  QPoly f = sample_poly(n, 5), g = sample_poly(n - 1, 6);
  for (auto _ : st) benchmark::DoNotOptimize(resultant(f, g));
}
BENCHMARK(BM_Resultant)->RangeMultiplier(2)->Range(4, 32);

void BM_Enumerate(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_dessins(n));
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_FamilySearch(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(search_family_params(-11, st.range(0)));
}
BENCHMARK(BM_FamilySearch)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_BelyiDegreePrime(benchmark::State& st) {
  auto k = NumberField::quadratic(Integer(-st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(belyi_degree(k));
}
BENCHMARK(BM_BelyiDegreePrime)->Arg(11)->Arg(59)->Arg(191)->Unit(benchmark::kMillisecond);

void BM_PipelineRationals(benchmark::State& st) {
  auto q = NumberField::rationals();
  for (auto _ : st) benchmark::DoNotOptimize(pipeline_run(q, default_basis(q)));
}
BENCHMARK(BM_PipelineRationals)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
