#include <benchmark/benchmark.h>

#include "gr/enumerate.hpp"
#include "gr/families.hpp"
#include "gr/ribbon.hpp"
#include "gr/survey.hpp"

namespace {

void BM_BoundaryCount(benchmark::State& state) {
  const auto g = gr::AssemblyGraph::build(gr::tangled_cord(static_cast<int>(state.range(0))));
  std::uint64_t bits = 0;
  const std::uint64_t mask = g.vertex_count() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gr::boundary_count(g, gr::EmbeddingChoice(g.vertex_count(), bits)));
    bits = (bits + 0x9e3779b97f4a7c15u) & mask;
  }
}
BENCHMARK(BM_BoundaryCount)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_GenusRange(benchmark::State& state) {
  const auto w = gr::repeat_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gr::genus_range(w));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_GenusRange)->DenseRange(9, 17, 4)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gr::canonical_words(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Survey(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gr::survey(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Survey)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
