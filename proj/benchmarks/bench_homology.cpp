#include <benchmark/benchmark.h>

#include "hatsplit/homology.hpp"
#include "hatsplit/presets.hpp"
#include "hatsplit/split_search.hpp"
#include "hatsplit/triangulate.hpp"

namespace {

using namespace hatsplit;

void BM_HomologyPreset(benchmark::State& state) {
  const auto c = preset(preset_names()[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(homology(c));
  state.SetLabel(preset_names()[static_cast<std::size_t>(state.range(0))]);
}
BENCHMARK(BM_HomologyPreset)->DenseRange(0, 4);

// Word length drives the triangle count (6 * m * k after one subdivision).
void BM_HomologyTriangulated(benchmark::State& state) {
  const std::string word(static_cast<std::size_t>(state.range(0)), 'a');
  const auto c = triangulate(parse_word(word + "A"), 3).complex;
  for (auto _ : state) benchmark::DoNotOptimize(homology(c));
  state.counters["triangles"] = c.num_triangles();
}
BENCHMARK(BM_HomologyTriangulated)->RangeMultiplier(2)->Range(2, 32);

void BM_HomologySubdivided(benchmark::State& state) {
  const auto c = subdivide(preset("dunce_min"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology(c));
  state.counters["triangles"] = c.num_triangles();
}
BENCHMARK(BM_HomologySubdivided)->DenseRange(0, 3);

void BM_Triangulate(benchmark::State& state) {
  const auto p = parse_word("abABaabb");
  for (auto _ : state) benchmark::DoNotOptimize(triangulate(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Triangulate)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
