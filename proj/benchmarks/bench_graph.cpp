#include <benchmark/benchmark.h>

#include "hatsplit/link_graph.hpp"
#include "hatsplit/multigraph.hpp"

namespace {

using namespace hatsplit;

void BM_RandomInstance(benchmark::State& state) {
  const auto kind = static_cast<InstanceKind>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_instance(kind, 40, seed++));
}
BENCHMARK(BM_RandomInstance)->DenseRange(0, 2);

void BM_CycleVertices(benchmark::State& state) {
  const auto g = random_instance(InstanceKind::Lemma2, static_cast<int>(state.range(0)), 1).graph;
  for (auto _ : state) benchmark::DoNotOptimize(cycle_vertices(g));
  state.counters["edges"] = g.num_edges();
}
BENCHMARK(BM_CycleVertices)->RangeMultiplier(4)->Range(16, 4096);

void BM_Consolidate(benchmark::State& state) {
  // Prop4 instances keep their degree-2 vertices; drop the all-degree-2 case.
  std::uint64_t seed = 0;
  Multigraph g;
  for (;; ++seed) {
    g = random_instance(InstanceKind::Prop4, static_cast<int>(state.range(0)), seed).graph;
    try {
      consolidate(g);
      break;
    } catch (...) {
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(consolidate(g));
}
BENCHMARK(BM_Consolidate)->RangeMultiplier(4)->Range(16, 1024);

void BM_Prop4Vertex(benchmark::State& state) {
  const auto inst = random_instance(InstanceKind::Prop4, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_prop4_vertex(inst.graph, *inst.alpha));
}
BENCHMARK(BM_Prop4Vertex)->RangeMultiplier(4)->Range(16, 1024);

void BM_BuildLink(benchmark::State& state) {
  std::string w;
  for (int i = 0; i < state.range(0); ++i) w += "abAB"[i % 4];
  const auto p = parse_word(w);
  for (auto _ : state) benchmark::DoNotOptimize(build_link(p));
}
BENCHMARK(BM_BuildLink)->RangeMultiplier(4)->Range(4, 1024);

void BM_SelectCase2(benchmark::State& state) {
  std::string w;
  for (int i = 0; i < state.range(0); ++i) w += "aabAB"[i % 5];
  const auto p = parse_word(w);
  for (auto _ : state) benchmark::DoNotOptimize(select_case2_edge(p));
}
BENCHMARK(BM_SelectCase2)->RangeMultiplier(4)->Range(5, 1280);

}  // namespace

BENCHMARK_MAIN();
