#include <benchmark/benchmark.h>

#include "svx/expansion.hpp"
#include "svx/families.hpp"

namespace {

svx::Digraph bench_graph(int n) { return svx::random_eulerian(n, 0.45, 17); }

void BM_MinPhiDir(benchmark::State& state) {
  svx::Digraph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(svx::min_phi_dir(g));
}
BENCHMARK(BM_MinPhiDir)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_MinPhiOnLift(benchmark::State& state) {
  svx::Digraph lift = svx::symmetric_lift(bench_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(svx::min_phi(lift));
}
BENCHMARK(BM_MinPhiOnLift)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MinBeta(benchmark::State& state) {
  svx::Digraph g = svx::random_undirected(static_cast<int>(state.range(0)), 0.5, 17);
  for (auto _ : state) benchmark::DoNotOptimize(svx::min_beta(g));
}
BENCHMARK(BM_MinBeta)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_KWayFamilies(benchmark::State& state) {
  svx::Digraph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(svx::min_phi_k_dir(g, 3));
}
BENCHMARK(BM_KWayFamilies)->DenseRange(5, 7, 1)->Unit(benchmark::kMillisecond);

void BM_VertexExpansion(benchmark::State& state) {
  svx::Digraph g = svx::cycle(static_cast<int>(state.range(0)), 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(svx::vertex_expansion(g, g.size() / 2));
}
BENCHMARK(BM_VertexExpansion)->DenseRange(16, 24, 4)->Unit(benchmark::kMillisecond);

}  // namespace
