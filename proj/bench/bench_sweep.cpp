#include <vector>

#include <benchmark/benchmark.h>

#include "photocorr/hydrogenic.hpp"

using namespace photocorr;

namespace {

struct Setup {
  std::vector<double> energies;
  std::vector<HydrogenicOrbital> targets;
};

Setup make_setup(int nodes) {
  Setup s;
  const EnergyQuadrature quad(1.0, 20.0);
  const auto &all = quad.energies();
  for (int i = 0; i < nodes && i < static_cast<int>(all.size()); ++i)
    s.energies.push_back(all[static_cast<std::size_t>(i) * all.size() / nodes]);
  s.targets = {HydrogenicOrbital(1.0, 2, 1), HydrogenicOrbital(1.0, 3, 1)};
  return s;
}

void BM_SweepSerial(benchmark::State &state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(continuum_sweep_serial(1.0, s.energies, s.targets));
  state.SetItemsProcessed(state.iterations() * s.energies.size());
}

void BM_SweepParallel(benchmark::State &state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(continuum_sweep(1.0, s.energies, s.targets));
  state.SetItemsProcessed(state.iterations() * s.energies.size());
}

} // namespace

BENCHMARK(BM_SweepSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
