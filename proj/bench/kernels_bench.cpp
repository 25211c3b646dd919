// Serial reference vs. OpenMP path for each oracle kernel.
//
//   ./cube_orbits_bench --benchmark_filter=OrbitLabels
//   OMP_NUM_THREADS=8 ./cube_orbits_bench

#include <benchmark/benchmark.h>

#include "cube_orbits/cube_graph.hpp"
#include "cube_orbits/oracle.hpp"
#include "cube_orbits/orbit_kernels.hpp"

using namespace cube_orbits;
using namespace cube_orbits::oracle;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void set_label(benchmark::State& state) { state.SetLabel(state.range(1) == 0 ? "serial" : "parallel"); }

void BM_VertexPermutation(benchmark::State& state) {
  const auto g = CubeGraph::build(static_cast<std::size_t>(state.range(0)), Cube::Lambda);
  const auto elem = DihedralElement::reflection(3);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_permutation(g, elem, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.vertices().size()));
  set_label(state);
}

void BM_EdgePermutation(benchmark::State& state) {
  const auto g = CubeGraph::build(static_cast<std::size_t>(state.range(0)), Cube::Lambda);
  const auto vperm = vertex_permutation(g, DihedralElement::rotation(1), Execution::Serial);
  for (auto _ : state) benchmark::DoNotOptimize(edge_permutation(g, vperm, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.edges().size()));
  set_label(state);
}

void BM_OrbitLabels(benchmark::State& state) {
  const auto g = CubeGraph::build(static_cast<std::size_t>(state.range(0)), Cube::Lambda);
  const auto group = acting_group(g, Execution::Serial);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_labels(group, g.vertices().size(), mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.vertices().size() * group.size()));
  set_label(state);
}

void BM_ClassifyStrings(benchmark::State& state) {
  const auto strings = enumerate(static_cast<std::size_t>(state.range(0)), CubeKind::Lucas);
  for (auto _ : state) benchmark::DoNotOptimize(classify_strings(strings, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(strings.size()));
  set_label(state);
}

void BM_ReflectionFixedPoints(benchmark::State& state) {
  const auto strings = enumerate(static_cast<std::size_t>(state.range(0)), CubeKind::Lucas);
  for (auto _ : state) benchmark::DoNotOptimize(reflection_fixed_point_total(strings, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(strings.size()));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_VertexPermutation)->ArgsProduct({{16, 20, 24}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EdgePermutation)->ArgsProduct({{16, 20, 24}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OrbitLabels)->ArgsProduct({{16, 20, 24}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyStrings)->ArgsProduct({{14, 18, 20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReflectionFixedPoints)->ArgsProduct({{14, 18, 20}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
