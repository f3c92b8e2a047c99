#include <algorithm>

#include "twopart/kernels.hpp"

#if defined(TWOPART_HAVE_OPENMP)
#include <omp.h>
#endif

namespace twopart::kernels::omp {

int max_threads() {
#if defined(TWOPART_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename Scalar>
void dense_apply(DenseView<Scalar> a, std::span<const double> x, std::span<double> out) {
  const auto rows = static_cast<std::ptrdiff_t>(a.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < rows; ++j) {
    const auto row = a.row(static_cast<std::size_t>(j));
    double acc = 0.0;
    for (std::size_t i = 0; i < a.cols; ++i) acc += static_cast<double>(row[i]) * x[i];
    out[static_cast<std::size_t>(j)] = acc;
  }
}

// Columns are split into contiguous blocks, one per thread; each thread sweeps
// all rows over its own block so every out[i] keeps the serial summation order.
template <typename Scalar>
void dense_apply_transposed(DenseView<Scalar> a, std::span<const double> r,
                            std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
#pragma omp parallel
  {
#if defined(TWOPART_HAVE_OPENMP)
    const auto nthreads = static_cast<std::size_t>(omp_get_num_threads());
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t nthreads = 1;
    const std::size_t tid = 0;
#endif
    const std::size_t block = (a.cols + nthreads - 1) / nthreads;
    const std::size_t begin = std::min(a.cols, tid * block);
    const std::size_t end = std::min(a.cols, begin + block);
    for (std::size_t j = 0; j < a.rows; ++j) {
      const double rj = r[j];
      if (rj == 0.0) continue;
      const auto row = a.row(j);
      for (std::size_t i = begin; i < end; ++i) out[i] += rj * static_cast<double>(row[i]);
    }
  }
}

template <typename Scalar>
void gather_columns(DenseView<Scalar> a, std::span<const Index> cols, std::span<Scalar> out) {
  const std::size_t width = cols.size();
  const auto rows = static_cast<std::ptrdiff_t>(a.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t jj = 0; jj < rows; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    const auto row = a.row(j);
    for (std::size_t c = 0; c < width; ++c) out[j * width + c] = row[cols[c]];
  }
}

void sparse_apply(CompressedLists rows, double scale, std::span<const double> x,
                  std::span<double> out) {
  const auto count = static_cast<std::ptrdiff_t>(rows.count());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    double acc = 0.0;
    for (Index i : rows.list(static_cast<std::size_t>(j))) acc += x[i];
    out[static_cast<std::size_t>(j)] = scale * acc;
  }
}

void count_hits(CompressedLists cols, std::span<const std::uint8_t> mask,
                std::span<std::size_t> counts) {
  const auto count = static_cast<std::ptrdiff_t>(cols.count());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    std::size_t c = 0;
    for (Index j : cols.list(static_cast<std::size_t>(i))) c += mask[j];
    counts[static_cast<std::size_t>(i)] = c;
  }
}

template void dense_apply<double>(DenseView<double>, std::span<const double>, std::span<double>);
template void dense_apply<float>(DenseView<float>, std::span<const double>, std::span<double>);
template void dense_apply_transposed<double>(DenseView<double>, std::span<const double>,
                                             std::span<double>);
template void dense_apply_transposed<float>(DenseView<float>, std::span<const double>,
                                            std::span<double>);
template void gather_columns<double>(DenseView<double>, std::span<const Index>, std::span<double>);
template void gather_columns<float>(DenseView<float>, std::span<const Index>, std::span<float>);

}  // namespace twopart::kernels::omp
