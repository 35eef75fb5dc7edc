// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

// Parallel kernels against their serial references. Run with
// OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include "spinchain/bethe.hpp"
#include "spinchain/quantized.hpp"

namespace {

using namespace spinchain;

struct Operands {
  SectorOperator a, b;
};

Operands operands(int n) {
  auto s = FockSector::make(n, n / 2, Boundary::closed);
  return {build_elementary(2, s), build_complete(3, s)};
}

void BM_Multiply(benchmark::State& state) {
  auto [a, b] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}

void BM_MultiplySerial(benchmark::State& state) {
  auto [a, b] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(a, b));
}

void BM_Compound(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Matrix f = dft_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(compound(f, n / 2));
}

void BM_CompoundSerial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Matrix f = dft_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(compound_serial(f, n / 2));
}

void BM_BviTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  BviTable t(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(t.all());
}

void BM_BviTableSerial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  BviTable t(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(t.all_serial());
}

BENCHMARK(BM_Multiply)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplySerial)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compound)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompoundSerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BviTable)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BviTableSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
