#include <benchmark/benchmark.h>

#include <vector>

#include "hyperspec/enumerate.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/spectral.hpp"

using namespace hyperspec;

namespace {

void BM_apply_serial(benchmark::State& state) {
  const auto g = loose_path(4, static_cast<int>(state.range(0)));
  const std::vector<double> x(g.n(), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(apply_adjacency(g, x));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.m()));
}

void BM_apply_operator(benchmark::State& state) {
  const auto g = loose_path(4, static_cast<int>(state.range(0)));
  const AdjacencyOperator op(g);
  const std::vector<double> x(g.n(), 0.5);
  std::vector<double> y(g.n());
  for (auto _ : state) {
    op.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.m()));
}

void BM_spectral_radius(benchmark::State& state) {
  const auto g = d_family(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).rho);
}

void BM_enumerate(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Execution::serial : Execution::parallel;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(3, 4, {kDefaultMaxVertices, exec}).size());
  state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}

void BM_rank(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rank_by_rho(2, 6).classes.size());
}

}  // namespace

BENCHMARK(BM_apply_serial)->Arg(1000)->Arg(100000);
BENCHMARK(BM_apply_operator)->Arg(1000)->Arg(100000);
BENCHMARK(BM_spectral_radius)->Arg(8)->Arg(64);
BENCHMARK(BM_enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
