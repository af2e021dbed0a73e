// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "singreen/specfun.hpp"

namespace {

using namespace singreen;

void BM_CoulombFG(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  double x = 0.3;
  for (auto _ : state) {
    x = x > 40.0 ? 0.3 : x * 1.37;
    benchmark::DoNotOptimize(specfun::coulomb_fg(ell, 1.0, x));
  }
}
BENCHMARK(BM_CoulombFG)->Arg(0)->Arg(5)->Arg(10);

void BM_Riccati(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    x = x > 30.0 ? 0.1 : x * 1.29;
    benchmark::DoNotOptimize(specfun::riccati(ell, x));
  }
}
BENCHMARK(BM_Riccati)->Arg(1)->Arg(8)->Arg(20);

void BM_Digamma(benchmark::State& state) {
  std::complex<double> z{0.3, 0.7};
  for (auto _ : state) {
    z += std::complex<double>(0.1, 0.0);
    if (z.real() > 20.0) z = {0.3, 0.7};
    benchmark::DoNotOptimize(specfun::digamma(z));
  }
}
BENCHMARK(BM_Digamma);

}  // namespace
