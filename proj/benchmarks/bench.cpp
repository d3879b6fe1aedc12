#include <benchmark/benchmark.h>

#include "coverideal/coloring.hpp"
#include "coverideal/covers.hpp"
#include "coverideal/hypergraph.hpp"
#include "coverideal/invariants.hpp"
#include "coverideal/perfect.hpp"

namespace {

using namespace coverideal;

Hypergraph cycle(int n) {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Hypergraph(n, edges);
}

Hypergraph complete(int n) {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Hypergraph(n, edges);
}

void BM_minimal_covers(benchmark::State& state) {
  Hypergraph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_vertex_covers(g));
}
BENCHMARK(BM_minimal_covers)->Arg(8)->Arg(12)->Arg(16);

void BM_dual_of_power(benchmark::State& state) {
  Hypergraph g = complete(6);
  int s = static_cast<int>(state.range(0));
  Budget budget{10, 10};
  for (auto _ : state) benchmark::DoNotOptimize(dual_of_power(g, s, budget));
}
BENCHMARK(BM_dual_of_power)->Arg(2)->Arg(4)->Arg(6);

void BM_chromatic(benchmark::State& state) {
  Hypergraph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_chromatic)->Arg(9)->Arg(13);

void BM_chi_algebraic(benchmark::State& state) {
  Hypergraph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chi_algebraic(g));
}
BENCHMARK(BM_chi_algebraic)->Arg(5)->Arg(7);

void BM_perfect_algebraic(benchmark::State& state) {
  Hypergraph g = complete(static_cast<int>(state.range(0)));
  Budget budget{10, 10};
  for (auto _ : state) benchmark::DoNotOptimize(is_perfect_algebraic(g, budget));
}
BENCHMARK(BM_perfect_algebraic)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
