#include <benchmark/benchmark.h>

#include "jacobi/exactpoly.hpp"
#include "jacobi/experiments.hpp"
#include "jacobi/pencil.hpp"

namespace {

jacobi::JacobiPencil pencil(std::size_t n) {
  jacobi::SampleRng rng(1, n);
  return jacobi::sample_generic(n, 9, rng);
}

void BM_Continuant(benchmark::State& state) {
  const auto p = pencil(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi::continuant(p));
}
BENCHMARK(BM_Continuant)->DenseRange(2, 12, 2);

void BM_Discriminant(benchmark::State& state) {
  const auto curve = jacobi::continuant(pencil(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi::discriminant_in_lambda(curve));
}
BENCHMARK(BM_Discriminant)->DenseRange(2, 8, 1)->Unit(benchmark::kMillisecond);

void BM_ApplyAll(benchmark::State& state) {
  jacobi::SampleRng rng(2, 0);
  const auto p = jacobi::sample_palindromic(static_cast<std::size_t>(state.range(0)), 9, rng);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi::apply_all(p));
}
BENCHMARK(BM_ApplyAll)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
