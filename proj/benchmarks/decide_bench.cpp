#include <benchmark/benchmark.h>

#include "jacobi/experiments.hpp"
#include "jacobi/hensel.hpp"

namespace {

// Irreducible inputs force every canonical subset to be lifted.
void BM_Decide(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  jacobi::SampleRng rng(3, n);
  const auto p = jacobi::sample_generic(n, 9, rng);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi::decide(p));
  state.SetLabel(std::to_string(jacobi::canonical_subsets(n).size()) + " subsets");
}
BENCHMARK(BM_Decide)->DenseRange(3, 8, 1)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  jacobi::SampleRng rng(4, 0);
  const auto p = jacobi::sample_generic(8, 9, rng);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi::classify(p));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

}  // namespace
