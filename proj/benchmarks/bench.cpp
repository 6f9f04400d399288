#include <benchmark/benchmark.h>

#include "edgeideal/ass.hpp"
#include "edgeideal/betti.hpp"
#include "edgeideal/families.hpp"
#include "edgeideal/polyhedra.hpp"
#include "edgeideal/ring_properties.hpp"
#include "edgeideal/setfamily.hpp"

using namespace edgeideal;

namespace {

// The 25-edge graph whose regularity depends on the characteristic.
Clutter char_dependent_graph() {
  return graph_from_edges(11, {{0, 2}, {0, 3}, {0, 6}, {0, 9}, {0, 10}, {1, 3}, {1, 4}, {1, 7}, {1, 9},
                               {1, 10}, {2, 4}, {2, 5}, {2, 7}, {2, 10}, {3, 5}, {3, 8}, {3, 10}, {4, 6},
                               {4, 8}, {4, 10}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

void BM_BettiTable(benchmark::State& state) {
  auto I = edge_ideal(char_dependent_graph());
  auto f = state.range(0) ? CoefficientField::prime(static_cast<unsigned>(state.range(0))) : CoefficientField::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(I, f).regularity());
}
BENCHMARK(BM_BettiTable)->Arg(0)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_AssPowersCycle(benchmark::State& state) {
  auto I = edge_ideal(cycle_graph(7));
  for (auto _ : state) benchmark::DoNotOptimize(ass_powers(I, static_cast<unsigned>(state.range(0))).size());
}
BENCHMARK(BM_AssPowersCycle)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SymbolicPower(benchmark::State& state) {
  auto I = edge_ideal(complete_graph(6));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_power(I, static_cast<unsigned>(state.range(0))).size());
}
BENCHMARK(BM_SymbolicPower)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MinimalTransversals(benchmark::State& state) {
  auto g = complement_graph(cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_transversals(g.edges()).size());
}
BENCHMARK(BM_MinimalTransversals)->DenseRange(8, 16, 4);

void BM_VerticesQ(benchmark::State& state) {
  auto sample = random_clutters(static_cast<int>(state.range(0)), 32, 7);
  for (auto _ : state)
    for (const auto& c : sample) benchmark::DoNotOptimize(vertices_Q(IncidenceMatrix(c)).size());
}
BENCHMARK(BM_VerticesQ)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_TotallyUnimodular(benchmark::State& state) {
  auto sample = random_clutters(static_cast<int>(state.range(0)), 32, 11);
  for (auto _ : state)
    for (const auto& c : sample) benchmark::DoNotOptimize(is_totally_unimodular(IncidenceMatrix(c)).unimodular);
}
BENCHMARK(BM_TotallyUnimodular)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_RingProperties(benchmark::State& state) {
  auto sample = random_clutters(static_cast<int>(state.range(0)), 16, 3);
  for (auto _ : state)
    for (const auto& c : sample) benchmark::DoNotOptimize(ring_properties(c, CoefficientField::rationals()).scm);
}
BENCHMARK(BM_RingProperties)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_GraphFamily(benchmark::State& state) {
  // graphs() caches, so time canonical forms of a fixed sample instead
  auto sample = random_graphs(static_cast<int>(state.range(0)), 64, 5);
  for (auto _ : state)
    for (const auto& g : sample) benchmark::DoNotOptimize(canonical_graph(g).num_edges());
}
BENCHMARK(BM_GraphFamily)->DenseRange(6, 8);

}  // namespace

BENCHMARK_MAIN();
