// Serial vs OpenMP kernels at the sizes a default sweep uses (n = 2000,
// m up to 4000). Set OMP_NUM_THREADS to choose the parallel width.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "twopart/kernels.hpp"
#include "twopart/rng.hpp"
#include "twopart/sensing.hpp"

namespace {

using namespace twopart;
using kernels::Execution;

constexpr std::size_t kCols = 2000;

std::vector<double> random_vector(std::size_t size, Seed seed) {
  Rng rng(seed);
  std::vector<double> v(size);
  for (double& e : v) e = rng.normal();
  return v;
}

template <Execution E>
void BM_DenseApply(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto a = gen_gaussian_matrix(rows, kCols, 1);
  const auto x = random_vector(kCols, 2);
  std::vector<double> out(rows);
  for (auto _ : state) {
    kernels::dense_apply<double>(E, a.view(), x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rows * kCols));
}

template <Execution E>
void BM_DenseApplyTransposed(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto a = gen_gaussian_matrix(rows, kCols, 1);
  const auto r = random_vector(rows, 3);
  std::vector<double> out(kCols);
  for (auto _ : state) {
    kernels::dense_apply_transposed<double>(E, a.view(), r, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rows * kCols));
}

template <Execution E>
void BM_SparseApply(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto a = gen_bernoulli_matrix(rows, kCols, 0.01, 4);
  const auto x = random_vector(kCols, 5);
  std::vector<double> out(rows);
  for (auto _ : state) {
    kernels::sparse_apply(E, a.row_lists(), a.scale(), x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.nonzeros()));
}

template <Execution E>
void BM_CountHits(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto a = gen_bernoulli_matrix(rows, kCols, 0.01, 6);
  Rng rng(7);
  std::vector<std::uint8_t> mask(rows);
  for (auto& b : mask) b = rng.uniform01() < 0.8;
  std::vector<std::size_t> counts(kCols);
  for (auto _ : state) {
    kernels::count_hits(E, a.col_lists(), mask, counts);
    benchmark::DoNotOptimize(counts.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.nonzeros()));
}

#define TWOPART_BENCH(fn, lo, hi)                                                    \
  BENCHMARK_TEMPLATE(fn, Execution::serial)->RangeMultiplier(4)->Range(lo, hi);   \
  BENCHMARK_TEMPLATE(fn, Execution::parallel)->RangeMultiplier(4)->Range(lo, hi)

TWOPART_BENCH(BM_DenseApply, 256, 4096);
TWOPART_BENCH(BM_DenseApplyTransposed, 256, 4096);
TWOPART_BENCH(BM_SparseApply, 64, 1024);
TWOPART_BENCH(BM_CountHits, 64, 1024);

}  // namespace

BENCHMARK_MAIN();
