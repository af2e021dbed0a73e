// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "singreen/greens3d.hpp"
#include "singreen/potential.hpp"

namespace {

using namespace singreen;

void BM_FreeSeriesPoint(benchmark::State& state) {
  greens3d::Evaluator ev(potentials::PotentialSpec::free_space(), 1.0, 0.1, 5.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev.sum(0.5, 2.0, 0.3, 1e-10, 64));
  }
}
BENCHMARK(BM_FreeSeriesPoint);

void BM_GenericSolveAndOrigin(benchmark::State& state) {
  // dominated by the one-time radial solve; measures a cold evaluator
  const auto spec = potentials::PotentialSpec::power_exp(1.5, 1.0);
  for (auto _ : state) {
    greens3d::Evaluator ev(spec, 1.0, 1e-4, 1e-2);
    benchmark::DoNotOptimize(ev.at_origin(1e-3));
  }
}
BENCHMARK(BM_GenericSolveAndOrigin)->Unit(benchmark::kMillisecond);

void BM_OriginSampleWarm(benchmark::State& state) {
  const auto spec = potentials::PotentialSpec::power_exp(1.5, 1.0);
  greens3d::Evaluator ev(spec, 1.0, 1e-4, 1e-2);
  ev.at_origin(1e-3);  // warm the cache
  double r = 1e-4;
  for (auto _ : state) {
    r = r > 9e-3 ? 1e-4 : r * 1.07;
    benchmark::DoNotOptimize(ev.at_origin(r));
  }
}
BENCHMARK(BM_OriginSampleWarm);

}  // namespace
