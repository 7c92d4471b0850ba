#include "qm/sums.hpp"

#include <benchmark/benchmark.h>

using namespace qm;

namespace {

void BM_PhiOfElement(benchmark::State& state) {
  const Field& f = lookup_field(-4);
  SpfTable spf(1 << 20);
  PrimeCache cache(f, 1 << 20);
  i64 u = 913, v = 411;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_of_element(f, u, v, spf, cache));
    u += 7;
    if (u > 1000) u -= 997;
  }
}
BENCHMARK(BM_PhiOfElement);

void BM_PhiBoxBuild(benchmark::State& state) {
  const Field& f = lookup_field(-4);
  i64 bound = state.range(0);
  SpfTable spf(bound + 1);
  PrimeCache cache(f, bound + 1);
  for (auto _ : state) {
    PhiBox box(f, bound, spf, cache);
    benchmark::DoNotOptimize(box.phi.data());
  }
  state.SetItemsProcessed(state.iterations() * bound);
}
BENCHMARK(BM_PhiBoxBuild)->Arg(10'000)->Arg(90'000);

void BM_SectorCount(benchmark::State& state) {
  const Field& f = lookup_field(-3);
  Sector s = make_sector(f, Element(2, 1, f), angle_pi(1, 3), double(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(s));
}
BENCHMARK(BM_SectorCount)->Arg(200)->Arg(500);

void BM_MertensSum(benchmark::State& state) {
  const Field& f = lookup_field(-4);
  Ideal oK = unit_ideal(f);
  for (auto _ : state) {
    MirskySumResult r;
    benchmark::DoNotOptimize(mertens_sum(oK, double(state.range(0))));
    benchmark::DoNotOptimize(&r);
  }
}
BENCHMARK(BM_MertensSum)->Arg(10'000)->Arg(100'000);

void BM_CorrelationSeries(benchmark::State& state) {
  const Field& f = lookup_field(-4);
  Ideal oK = unit_ideal(f);
  ConstantOptions opts;
  opts.series_cutoff = state.range(0);
  opts.product_cutoff = 10'000;
  for (auto _ : state)
    benchmark::DoNotOptimize(mirsky_constant(oK, one(f), opts).value_series);
}
BENCHMARK(BM_CorrelationSeries)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_FactorNorm1e8(benchmark::State& state) {
  const Field& f = lookup_field(-7);
  i64 u = 9001, v = 37;
  for (auto _ : state) {
    Element x(u, v, f);
    benchmark::DoNotOptimize(factor(x));
    u += 13;
    if (u > 10'000) u -= 9'973;
  }
}
BENCHMARK(BM_FactorNorm1e8);

}  // namespace

BENCHMARK_MAIN();
