#include <benchmark/benchmark.h>

#include "qloci/oracle.hpp"
#include "qloci/poset.hpp"

namespace {

using namespace qloci;

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_OrbitPartition(benchmark::State& state) {
  const PointSpace space(TypeAQuiver::parse("LR"), DimensionVector({2, 2, 2}), 2);
  for (auto _ : state) benchmark::DoNotOptimize(brute_orbit_partition(space, kDefaultGuard, exec_of(state)));
}
BENCHMARK(BM_OrbitPartition)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateOrbits(benchmark::State& state) {
  const BipartiteQuiver q(2);
  const DimensionVector d({2, 3, 3, 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbits(q, d, kDefaultGuard, exec_of(state)));
}
BENCHMARK(BM_EnumerateOrbits)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Hasse(benchmark::State& state) {
  const BipartiteQuiver q(2);
  const DimensionVector d({2, 3, 3, 3, 2});
  const auto nodes = enumerate_orbits(q, d, kDefaultGuard, Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(hasse(q, d, nodes, exec_of(state)));
}
BENCHMARK(BM_Hasse)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RankOracle(benchmark::State& state) {
  const TypeAQuiver q = TypeAQuiver::parse("LR");
  const DimensionVector d({2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(verify_rank_determines_orbit(q, d, 2, kDefaultGuard, exec_of(state)));
}
BENCHMARK(BM_RankOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
