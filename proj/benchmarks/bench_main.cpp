#include <benchmark/benchmark.h>

#include "eulerperc/clusters.hpp"
#include "eulerperc/contour.hpp"
#include "eulerperc/even_measure.hpp"
#include "eulerperc/exact_graph.hpp"
#include "eulerperc/fk.hpp"
#include "eulerperc/ising.hpp"
#include "eulerperc/lattice.hpp"
#include "eulerperc/monotone.hpp"
#include "eulerperc/rng.hpp"

using namespace eulerperc;

static void BM_IsingSweep(benchmark::State& state) {
  const BoxGeometry g = BoxGeometry::build(static_cast<int>(state.range(0)));
  const bool cluster = state.range(1) != 0;
  BoxIsingSampler sampler(g, IsingParams{beta_of_p(0.3), Boundary{}}, 1, cluster);
  for (auto _ : state) sampler.sweep();
  state.SetItemsProcessed(state.iterations() * g.num_dual_sites());
}
BENCHMARK(BM_IsingSweep)->ArgsProduct({{16, 32, 64}, {0, 1}});

static void BM_Components(benchmark::State& state) {
  const BoxGeometry g = BoxGeometry::build(static_cast<int>(state.range(0)));
  EvenPercolationSampler sampler(g, 0.3, 2);
  sampler.sweep(50);
  const EdgeConfig cfg = sampler.sample();
  for (auto _ : state) benchmark::DoNotOptimize(components(g, cfg));
}
BENCHMARK(BM_Components)->Arg(32)->Arg(64);

static void BM_Crossing(benchmark::State& state) {
  const BoxGeometry g = BoxGeometry::build(64);
  EvenPercolationSampler sampler(g, 0.3, 3);
  sampler.sweep(50);
  const EdgeConfig cfg = sampler.sample();
  for (auto _ : state) benchmark::DoNotOptimize(crossing(g, cfg, Axis::kHorizontal));
}
BENCHMARK(BM_Crossing);

static void BM_FkSwendsenWang(benchmark::State& state) {
  const BoxGeometry box = BoxGeometry::build(static_cast<int>(state.range(0)));
  const FiniteGraph g = box_graph(box);
  const FKParams params{0.6, 2.0, FKBoundary::kFree, {}};
  EdgeConfig cfg(static_cast<std::size_t>(g.num_edges()));
  Rng rng(4);
  for (auto _ : state) fk_swendsen_wang_step(g, cfg, params, rng);
}
BENCHMARK(BM_FkSwendsenWang)->Arg(16)->Arg(32);

static void BM_CertifyMonotonicity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certify_monotonicity());
}
BENCHMARK(BM_CertifyMonotonicity)->Unit(benchmark::kMillisecond);

static void BM_PartitionPoly(benchmark::State& state) {
  const FiniteGraph g = box_graph(BoxGeometry::build(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(partition_poly(g));
}
BENCHMARK(BM_PartitionPoly)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ExactEvenMeasure(benchmark::State& state) {
  const BoxGeometry g = BoxGeometry::build(2);
  const EdgeConfig closed(static_cast<std::size_t>(g.num_edges()));
  const auto window = all_edges(g);
  for (auto _ : state) benchmark::DoNotOptimize(exact_even_measure(g, window, closed, 0.3));
}
BENCHMARK(BM_ExactEvenMeasure)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
