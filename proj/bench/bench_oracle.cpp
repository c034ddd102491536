#include <benchmark/benchmark.h>

#include "pmint/instance_io.hpp"

namespace {

pmint::Instance random_tree(int n, std::uint64_t seed) {
  pmint::GeneratorSpec spec;
  spec.kind = pmint::GeneratorKind::TreeUnitRandom;
  spec.size = n;
  spec.seed = seed;
  spec.budget = 2;
  return pmint::generate(spec);
}

pmint::Graph random_graph(int n, std::uint64_t seed) {
  // a random tree plus chords i -> i + 3, so enumeration is the only exact route
  std::vector<pmint::Edge> edges = random_tree(n, seed).graph.edges();
  for (int v = 1; v + 3 <= n; v += 2)
    if (pmint::Graph(n, edges).find_edge(v, v + 3) == 0) edges.push_back({v, v + 3, 2, 1});
  return pmint::Graph(n, edges);
}

void BM_Oracle(benchmark::State& state) {
  const auto inst = random_tree(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pmint::oracle(inst.graph, inst.p, inst.budget));
}

void BM_OracleSerial(benchmark::State& state) {
  const auto inst = random_tree(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pmint::oracle_serial(inst.graph, inst.p, inst.budget));
}

void BM_MedianEnum(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pmint::solve_p_median_enum(g, 3));
}

void BM_MedianEnumSerial(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pmint::solve_p_median_enum_serial(g, 3));
}

void BM_MedianForest(benchmark::State& state) {
  const auto inst = random_tree(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pmint::solve_p_median_forest(inst.graph, 3));
}

}  // namespace

BENCHMARK(BM_Oracle)->Arg(12)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(12)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MedianEnum)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MedianEnumSerial)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MedianForest)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
