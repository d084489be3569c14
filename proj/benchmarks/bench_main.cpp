#include <benchmark/benchmark.h>

#include <string>
#include <utility>
#include <vector>

#include "atlas/keywords.hpp"
#include "atlas/layout.hpp"
#include "atlas/network.hpp"
#include "atlas/random.hpp"
#include "fixtures.hpp"

using namespace atlas;

namespace {

void BM_BuildDictionary(benchmark::State& state) {
  const Corpus corpus = fixtures::synthetic_corpus(static_cast<std::size_t>(state.range(0)), 40, 1);
  const DerivationConfig config = DerivationConfig::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(build_dictionary(corpus, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildDictionary)->Arg(100)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Treemap(benchmark::State& state) {
  SplitMix64 rng(3);
  std::vector<std::pair<std::string, double>> weights;
  for (int i = 0; i < state.range(0); ++i) weights.emplace_back("c" + std::to_string(i), 1.0 + rng.uniform() * 99.0);
  const Rect rect{0, 0, 960, 640};
  for (auto _ : state) benchmark::DoNotOptimize(treemap_partition(weights, rect));
}
BENCHMARK(BM_Treemap)->Arg(20)->Arg(200);

void BM_LayoutGrouped(benchmark::State& state) {
  const auto items = static_cast<std::size_t>(state.range(0));
  const Corpus corpus = fixtures::synthetic_corpus(items, 40, 11);
  const DerivationConfig config = DerivationConfig::defaults();
  const auto network = derive_network(corpus, build_dictionary(corpus, config), config);
  const auto assignment = assign_clusters(network);
  const SimulationParams params;
  for (auto _ : state) benchmark::DoNotOptimize(layout_grouped(network, assignment, params));
  state.counters["nodes"] = static_cast<double>(network.nodes.size());
}
BENCHMARK(BM_LayoutGrouped)->Arg(160)->Arg(560)->Unit(benchmark::kMillisecond);

void BM_LayoutRadial(benchmark::State& state) {
  const Corpus corpus = fixtures::synthetic_corpus(560, 40, 11);
  const DerivationConfig config = DerivationConfig::defaults();
  const auto network = derive_network(corpus, build_dictionary(corpus, config), config);
  const SimulationParams params;
  const std::string keyword = fixtures::topic_words()[0];
  for (auto _ : state) benchmark::DoNotOptimize(layout_radial(corpus, network, config, keyword, params));
}
BENCHMARK(BM_LayoutRadial)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
