#include <benchmark/benchmark.h>

#include "torunits/field_spec.hpp"
#include "torunits/kms.hpp"
#include "torunits/sim.hpp"

using namespace torunits;

namespace {

Workspace suite(const std::string& name) {
  return load_workspace(std::string(TORUNITS_DATA_DIR) + "/" + name + ".toml");
}

const ToralRep& cubic() {
  static const ToralRep rep = [] {
    auto ws = suite("real-cubic");
    return ToralRep(ws.units, ws.ideals.front());
  }();
  return rep;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_WeylSums(benchmark::State& state) {
  SimConfig c;
  c.steps = 200000;
  c.seed = 1;
  c.start = random_start(3, 1);
  auto samples = simulate_orbit(cubic(), c);
  std::vector<std::vector<long>> ks{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {-1, 0, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(weyl_sums(samples, ks, exec_of(state)));
}
BENCHMARK(BM_WeylSums)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EquidistTrials(benchmark::State& state) {
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<std::vector<long>> ks{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(equidistribution_trials(cubic(), seeds, 20000, ks, exec_of(state)));
}
BENCHMARK(BM_EquidistTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IsotropyAll(benchmark::State& state) {
  const std::int64_t q = 7;
  auto group = reduce_group_mod_q(cubic(), q);
  auto orbits = partition_denominator(cubic(), q);
  for (auto _ : state) benchmark::DoNotOptimize(isotropy_all(orbits, group, cubic(), exec_of(state)));
}
BENCHMARK(BM_IsotropyAll)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TotallyIrreducibleSearch(benchmark::State& state) {
  auto ws = suite("x4m2");
  for (auto _ : state) benchmark::DoNotOptimize(totally_irreducible_unit_search(ws.units, 3, exec_of(state)));
}
BENCHMARK(BM_TotallyIrreducibleSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
