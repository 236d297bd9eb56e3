#include <benchmark/benchmark.h>

#include "hatsplit/collapse.hpp"
#include "hatsplit/presets.hpp"
#include "hatsplit/split_search.hpp"
#include "hatsplit/triangulate.hpp"

namespace {

using namespace hatsplit;

void BM_FreeFaces(benchmark::State& state) {
  const auto c = subdivide(preset("jester_seam"), 1);
  for (auto _ : state) benchmark::DoNotOptimize(free_faces(c));
}
BENCHMARK(BM_FreeFaces);

void BM_GreedyCollapse(benchmark::State& state) {
  const auto c = triangulate(parse_word("aA"), static_cast<int>(state.range(0))).complex;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(collapse_greedy(c, seed++));
  state.counters["simplices"] = c.simplex_count();
}
BENCHMARK(BM_GreedyCollapse)->DenseRange(3, 6);

void BM_ExactCollapsePruned(benchmark::State& state) {
  const auto jester = preset("jester_seam");
  const auto d1 = closure(jester, preset_regions("jester_seam")[0]);
  for (auto _ : state) benchmark::DoNotOptimize(is_collapsible(jester, d1));
}
BENCHMARK(BM_ExactCollapsePruned);

void BM_ExactCollapseUnpruned(benchmark::State& state) {
  const auto jester = preset("jester_seam");
  const auto d1 = closure(jester, preset_regions("jester_seam")[0]);
  CollapseSearchOptions opts;
  opts.prune_commuting_moves = false;
  for (auto _ : state) benchmark::DoNotOptimize(is_collapsible(jester, d1, opts));
}
BENCHMARK(BM_ExactCollapseUnpruned);

void BM_Peeling(benchmark::State& state) {
  const auto c = subdivide(preset("dunce_min"), static_cast<int>(state.range(0)));
  PeelingTester peel(c);
  const auto all = Subcomplex::all(c);
  for (auto _ : state) benchmark::DoNotOptimize(peel.collapsible(all));
  state.counters["triangles"] = c.num_triangles();
}
BENCHMARK(BM_Peeling)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
