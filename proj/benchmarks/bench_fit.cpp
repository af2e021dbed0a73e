// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "singreen/asymptotics.hpp"
#include "singreen/born.hpp"
#include "singreen/potential.hpp"

namespace {

using namespace singreen;
using complex = std::complex<double>;

void BM_ShortRangeFit(benchmark::State& state) {
  std::vector<std::pair<double, complex>> samples;
  for (double r : asymptotics::fit_window(1e-4, 1e-2, 60)) {
    samples.emplace_back(r, complex(1.0 / r - 2.0 * std::log(r) + 0.4, 0.1));
  }
  asymptotics::FitOptions opt;
  opt.corrections = asymptotics::default_corrections(potentials::SingularityClass::Coulomb, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        asymptotics::fit_short_range(samples, potentials::SingularityClass::Coulomb, 1.0, opt));
  }
}
BENCHMARK(BM_ShortRangeFit);

void BM_FirstIterationIntegral(benchmark::State& state) {
  const auto spec = potentials::PotentialSpec::power(1.5, 1.0, 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(born::i1_quadrature(spec, 0.005, 1e-3));
  }
}
BENCHMARK(BM_FirstIterationIntegral)->Unit(benchmark::kMicrosecond);

}  // namespace
