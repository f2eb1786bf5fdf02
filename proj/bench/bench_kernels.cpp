// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "dlakit/closure.hpp"
#include "dlakit/element.hpp"
#include "dlakit/oracle.hpp"
#include "dlakit/parallel.hpp"
#include "dlakit/verify.hpp"

using namespace dlakit;

namespace {

std::pair<OperatorElement, OperatorElement> operands(int terms) {
  Rng rng(42);
  return {random_element(16, terms, rng), random_element(16, terms, rng)};
}

void BM_BracketSerial(benchmark::State& state) {
  const auto [a, b] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(element_bracket_serial(a, b));
  state.SetComplexityN(state.range(0));
}

void BM_BracketParallel(benchmark::State& state) {
  const auto [a, b] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(element_bracket(a, b));
  state.SetComplexityN(state.range(0));
}

void BM_ClosureSerial(benchmark::State& state) {
  const GeneratorSet g = generators(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_closure(g, Execution::Serial));
}

void BM_ClosureParallel(benchmark::State& state) {
  const GeneratorSet g = generators(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_closure(g, Execution::Parallel));
}

void BM_DenseClosure(benchmark::State& state) {
  const auto gens = dense_generators(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dense_closure(gens));
}

}  // namespace

BENCHMARK(BM_BracketSerial)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketParallel)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureSerial)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseClosure)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
