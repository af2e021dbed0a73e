// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "singreen/screened.hpp"

namespace {

using namespace singreen;

void BM_Chi(benchmark::State& state) {
  const double R = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(screened::chi(0, 1.0, 1.0, R));
  }
}
BENCHMARK(BM_Chi)->Arg(10)->Arg(80)->Arg(320);

void BM_QTerm(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(screened::q_term(1.0, 1.0, 10.0, 0.3, 0.3, 1.0));
  }
}
BENCHMARK(BM_QTerm);

void BM_KernelNorm(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(screened::z_kernel_norm(1.0, 1.0, 50.0, 8));
  }
}
BENCHMARK(BM_KernelNorm);

}  // namespace
