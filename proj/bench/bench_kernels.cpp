// OpenMP kernels against their serial reference implementations.

#include <benchmark/benchmark.h>
#include <spdlog/spdlog.h>

#include "cdr/feature_pass.hpp"
#include "cdr/learner.hpp"
#include "cdr/rng.hpp"
#include "cdr/synth.hpp"

namespace {

using namespace cdr;

struct FeatureWorld {
  SynthData data;
  PriceIndex prices;
  WindowedGraph graph;
  std::vector<UserId> users;

  explicit FeatureWorld(const GeneratorConfig& g)
      : data(generate(g)),
        prices(data.estates),
        graph(WindowedGraph::build(data.calls, {4, 18}, g.calendar.epoch)),
        users(graph.nodes().begin(), graph.nodes().end()) {}
};

const FeatureWorld& world() {
  static const FeatureWorld w = [] {
    spdlog::set_level(spdlog::level::warn);
    auto g = default_generator_config();
    g.seed = 11;
    g.n_locals = 6000;
    g.n_settled = 1800;
    g.n_staying = 600;
    g.n_leaving = 60;
    g.price.n_estates = 2000;
    return FeatureWorld(g);
  }();
  return w;
}

void BM_FeaturesSerial(benchmark::State& state) {
  const auto& w = world();
  FeatureContext ctx{w.graph, w.data.calls, w.data.profiles, w.prices, default_generator_config().calendar, true, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(extract_features_serial(ctx, w.users));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.users.size()));
}

void BM_FeaturesParallel(benchmark::State& state) {
  const auto& w = world();
  FeatureContext ctx{w.graph, w.data.calls, w.data.profiles, w.prices, default_generator_config().calendar, true, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(extract_features(ctx, w.users));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.users.size()));
}

const Dataset& forest_data() {
  static const Dataset d = [] {
    Rng rng(5);
    Dataset ds;
    ds.X = Matrix(4000, 38);
    for (std::size_t i = 0; i < ds.X.rows(); ++i) {
      const int label = rng.bernoulli(0.1);
      for (std::size_t c = 0; c < ds.X.cols(); ++c) ds.X(i, c) = rng.normal(c < 6 ? label : 0.0, 1.0);
      ds.y.push_back(label);
    }
    for (std::size_t c = 0; c < ds.X.cols(); ++c) ds.feature_names.push_back("f" + std::to_string(c));
    return ds;
  }();
  return d;
}

void BM_ForestSerial(benchmark::State& state) {
  ForestOptions o;
  o.n_trees = 100;
  o.max_depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(train_forest_serial(forest_data(), o, 1));
}

void BM_ForestParallel(benchmark::State& state) {
  ForestOptions o;
  o.n_trees = 100;
  o.max_depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(train_forest(forest_data(), o, 1));
}

}  // namespace

BENCHMARK(BM_FeaturesSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FeaturesParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ForestSerial)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ForestParallel)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
