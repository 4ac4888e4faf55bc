#include <benchmark/benchmark.h>

#include "monvar/lattice.hpp"

using namespace monvar;

namespace {

void BM_BuildCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(builtin_catalog());
}
BENCHMARK(BM_BuildCatalog)->Unit(benchmark::kMillisecond);

void BM_PropertyTable(benchmark::State& state) {
  auto L = product(with_new_bounds(n5()), chain(4));
  for (auto _ : state) {
    std::size_t count = 0;
    for (auto p : kAllProperties) count += elements_with(L, p).size();
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PropertyTable)->Unit(benchmark::kMillisecond);

void BM_Implications(benchmark::State& state) {
  auto L = product(m3(), n5());
  for (auto _ : state) benchmark::DoNotOptimize(check_implications(L));
}
BENCHMARK(BM_Implications)->Unit(benchmark::kMillisecond);

}  // namespace
