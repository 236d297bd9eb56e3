#include <benchmark/benchmark.h>

#include "hatsplit/presets.hpp"
#include "hatsplit/split_search.hpp"
#include "hatsplit/triangulate.hpp"

namespace {

using namespace hatsplit;

CoverQuery query(int pieces, Predicate p) {
  CoverQuery q;
  q.pieces = pieces;
  q.predicate = p;
  return q;
}

void BM_EnumerateGood(benchmark::State& state) {
  const auto c = preset("dunce_min");
  const auto p = static_cast<Predicate>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_good(c, p));
  state.SetLabel(std::string(predicate_name(p)));
}
BENCHMARK(BM_EnumerateGood)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_NegativeDunceFiniteH1(benchmark::State& state) {
  const auto c = preset("dunce_min");
  for (auto _ : state) benchmark::DoNotOptimize(find_cover(c, query(2, Predicate::FiniteH1)));
}
BENCHMARK(BM_NegativeDunceFiniteH1)->Unit(benchmark::kMillisecond);

void BM_DunceThreePieces(benchmark::State& state) {
  const auto c = preset("dunce_min");
  for (auto _ : state) benchmark::DoNotOptimize(find_cover(c, query(3, Predicate::Collapsible)));
}
BENCHMARK(BM_DunceThreePieces)->Unit(benchmark::kMillisecond);

void BM_JesterWithIntersection(benchmark::State& state) {
  const auto c = preset("jester_seam");
  auto q = query(2, Predicate::Collapsible);
  q.intersection = Predicate::Collapsible;
  for (auto _ : state) benchmark::DoNotOptimize(find_cover(c, q));
}
BENCHMARK(BM_JesterWithIntersection)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_HeuristicSphere(benchmark::State& state) {
  const auto c = triangulate(parse_word("aA"), static_cast<int>(state.range(0))).complex;
  for (auto _ : state) benchmark::DoNotOptimize(find_cover(c, query(2, Predicate::Collapsible)));
  state.counters["triangles"] = c.num_triangles();
}
BENCHMARK(BM_HeuristicSphere)->DenseRange(3, 6);

void BM_BruteForceOracle(benchmark::State& state) {
  const auto c = preset("rp2_6");
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_two_cover_exists(c, Predicate::FiniteH1));
}
BENCHMARK(BM_BruteForceOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
