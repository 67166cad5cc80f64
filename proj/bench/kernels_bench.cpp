// Parallel kernels against their serial references on a generated topology.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <map>

#include "mpa/generator.hpp"
#include "mpa/kernels.hpp"
#include "mpa/metrics.hpp"

namespace {

const mpa::AnnotatedGraph& topology(std::int64_t isps) {
  static std::map<std::int64_t, mpa::AnnotatedGraph> cache;
  auto it = cache.find(isps);
  if (it == cache.end()) {
    mpa::GeneratorConfig cfg;
    cfg.target_isps = static_cast<std::size_t>(isps);
    cfg.target_non_isps = static_cast<std::size_t>(isps * 7 / 3);
    it = cache.emplace(isps, mpa::run(cfg).graph).first;
  }
  return it->second;
}

void triangles_parallel(benchmark::State& state) {
  const auto& g = topology(state.range(0));
  for (auto _ : state) {
    const auto csr = mpa::kernels::build_csr(g);
    benchmark::DoNotOptimize(mpa::kernels::triangles(csr));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.node_count()));
}

void triangles_serial(benchmark::State& state) {
  const auto& g = topology(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mpa::kernels::serial::triangles(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.node_count()));
}

void neighbor_sums_parallel(benchmark::State& state) {
  const auto& g = topology(state.range(0));
  for (auto _ : state) {
    const auto csr = mpa::kernels::build_csr(g);
    benchmark::DoNotOptimize(mpa::kernels::neighbor_degree_sums(csr));
  }
}

void neighbor_sums_serial(benchmark::State& state) {
  const auto& g = topology(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mpa::kernels::serial::neighbor_degree_sums(g));
}

void ensemble_parallel(benchmark::State& state) {
  mpa::GeneratorConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(mpa::run_ensemble(cfg, 8));
}

void ensemble_serial(benchmark::State& state) {
  mpa::GeneratorConfig cfg;
  for (auto _ : state) {
    for (std::uint64_t i = 0; i < 8; ++i) {
      cfg.seed = 1 + i;
      benchmark::DoNotOptimize(mpa::run(cfg));
    }
  }
}

}  // namespace

BENCHMARK(triangles_parallel)->Arg(7200)->Arg(30000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(triangles_serial)->Arg(7200)->Arg(30000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(neighbor_sums_parallel)->Arg(7200)->Arg(30000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(neighbor_sums_serial)->Arg(7200)->Arg(30000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(ensemble_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(ensemble_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
