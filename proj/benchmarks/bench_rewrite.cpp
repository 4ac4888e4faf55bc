#include <benchmark/benchmark.h>

#include "monvar/matching.hpp"
#include "monvar/rewrite.hpp"
#include "monvar/variety.hpp"

using namespace monvar;

namespace {

const Presentation kSigmaE{Identity("x^2"_w, "x^3"_w), Identity("x^2y"_w, "xyx"_w),
                           Identity("x^2y^2"_w, "y^2x^2"_w)};

void BM_MatchPattern(benchmark::State& state) {
  Word pattern = "xyyx"_w;
  Word target = "xxyyxxyyxx"_w;
  for (auto _ : state) benchmark::DoNotOptimize(match_pattern(pattern, target));
}
BENCHMARK(BM_MatchPattern);

void BM_Successors(benchmark::State& state) {
  Word w = power("xy"_w, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(one_step_successors(w, kSigmaE));
}
BENCHMARK(BM_Successors)->Arg(2)->Arg(4)->Arg(8);

void BM_DeriveCube(benchmark::State& state) {
  Presentation cube{Identity("x"_w, "x^3"_w)};
  for (auto _ : state) benchmark::DoNotOptimize(derive(cube, "x^9yx^3"_w, "x^7yx^5"_w));
}
BENCHMARK(BM_DeriveCube);

void BM_SearchTreeE(benchmark::State& state) {
  SearchBounds b{static_cast<std::size_t>(state.range(0)), 10, 1'000'000};
  for (auto _ : state) {
    SearchTree tree(kSigmaE, "xyxy"_w, b);
    benchmark::DoNotOptimize(tree.size());
  }
}
BENCHMARK(BM_SearchTreeE)->Arg(6)->Arg(8);

void BM_JoinIsoterm(benchmark::State& state) {
  Presentation sigma_x{Identity("xyxyx"_w, "yxyxx"_w), Identity("xyyxx"_w, "yxxyx"_w)};
  auto h = VarietyHandle::join({VarietyHandle::builtin(BuiltinVariety::kLeftRegularBand),
                                VarietyHandle::presented(sigma_x, "X")});
  for (auto _ : state) benchmark::DoNotOptimize(isoterm_for(h, "yxyxx"_w));
}
BENCHMARK(BM_JoinIsoterm);

}  // namespace
