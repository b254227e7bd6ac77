#include <benchmark/benchmark.h>

#include "svx/certificates.hpp"
#include "svx/families.hpp"
#include "svx/spectra.hpp"

namespace {

void BM_JacobiEigen(benchmark::State& state) {
  svx::Digraph g = svx::cycle(static_cast<int>(state.range(0)), 1);
  svx::DenseMatrix a = svx::normalized_adjacency(g);
  for (auto _ : state) benchmark::DoNotOptimize(svx::symmetric_eigen(a));
}
BENCHMARK(BM_JacobiEigen)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_SingularValues(benchmark::State& state) {
  svx::Digraph g = svx::random_eulerian(static_cast<int>(state.range(0)), 0.45, 17);
  for (auto _ : state) benchmark::DoNotOptimize(svx::singular_values(g));
}
BENCHMARK(BM_SingularValues)->DenseRange(8, 32, 8)->Unit(benchmark::kMillisecond);

void BM_SweepCut(benchmark::State& state) {
  svx::Digraph g = svx::random_eulerian(static_cast<int>(state.range(0)), 0.3, 17);
  for (auto _ : state) benchmark::DoNotOptimize(svx::sweep_cut_pair(g));
}
BENCHMARK(BM_SweepCut)->DenseRange(8, 40, 8)->Unit(benchmark::kMillisecond);

}  // namespace
