// Wall-clock microbenchmarks for the exact kernels. Each fixture draws a
// deterministic matrix so runs are comparable; the scalar_ops counter
// reports the exact rational operation count alongside the timings.

#include <benchmark/benchmark.h>

#include <cstddef>

#include "cmc/compound.hpp"
#include "cmc/kernel.hpp"
#include "cmc/laplace.hpp"
#include "cmc/matrix.hpp"
#include "cmc/opcount.hpp"
#include "cmc/oracles.hpp"
#include "cmc/samplers.hpp"

namespace {

cmc::RMatrix fixture(std::size_t n) {
  cmc::Sampler sampler(1000003 * n + 17);
  return sampler.integer_matrix(n, n, 9);
}

void attach_op_counter(benchmark::State& state) {
  const auto& c = cmc::opcount::counters();
  state.counters["scalar_ops"] = static_cast<double>(c.scalar_ops());
  state.counters["minor_evals"] = static_cast<double>(c.minor_evaluations);
}

void BM_DetBareiss(benchmark::State& state) {
  cmc::RMatrix a = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    cmc::opcount::reset();
    benchmark::DoNotOptimize(cmc::det_bareiss(a));
  }
  attach_op_counter(state);
}
BENCHMARK(BM_DetBareiss)->DenseRange(2, 8);

void BM_DetPermutation(benchmark::State& state) {
  cmc::RMatrix a = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    cmc::opcount::reset();
    benchmark::DoNotOptimize(cmc::det_permutation(a));
  }
  attach_op_counter(state);
}
BENCHMARK(BM_DetPermutation)->DenseRange(2, 8);

void BM_DetCofactor(benchmark::State& state) {
  cmc::RMatrix a = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    cmc::opcount::reset();
    benchmark::DoNotOptimize(cmc::det_cofactor(a, 1));
  }
  attach_op_counter(state);
}
BENCHMARK(BM_DetCofactor)->DenseRange(2, 8);

void BM_DetPairRows(benchmark::State& state) {
  cmc::RMatrix a = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    cmc::opcount::reset();
    benchmark::DoNotOptimize(cmc::det_laplace_pair(a, 1, 2));
  }
  attach_op_counter(state);
}
BENCHMARK(BM_DetPairRows)->DenseRange(2, 8);

void BM_Compound(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::size_t p = static_cast<std::size_t>(state.range(1));
  cmc::RMatrix a = fixture(n);
  for (auto _ : state) {
    cmc::opcount::reset();
    benchmark::DoNotOptimize(cmc::compound(a, p));
  }
  attach_op_counter(state);
}
BENCHMARK(BM_Compound)->Args({4, 2})->Args({5, 2})->Args({6, 3})->Args({7, 3})->Args({8, 4});

void BM_AdjugateCompound(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::size_t p = static_cast<std::size_t>(state.range(1));
  cmc::RMatrix a = fixture(n);
  for (auto _ : state) {
    cmc::opcount::reset();
    benchmark::DoNotOptimize(cmc::adjugate_compound(a, p));
  }
  attach_op_counter(state);
}
BENCHMARK(BM_AdjugateCompound)->Args({4, 2})->Args({6, 3});

void BM_Adjugate(benchmark::State& state) {
  cmc::RMatrix a = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    cmc::opcount::reset();
    benchmark::DoNotOptimize(cmc::adjugate(a));
  }
  attach_op_counter(state);
}
BENCHMARK(BM_Adjugate)->DenseRange(2, 8);

void BM_KernelCorank2(benchmark::State& state) {
  cmc::Sampler sampler(99);
  cmc::RMatrix a = sampler.singular_of_rank(4, 2, 9);
  for (auto _ : state) {
    cmc::opcount::reset();
    benchmark::DoNotOptimize(cmc::kernel_corank2_4x4(a));
  }
  attach_op_counter(state);
}
BENCHMARK(BM_KernelCorank2);

}  // namespace

BENCHMARK_MAIN();
