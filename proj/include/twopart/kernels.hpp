#pragma once

// Inner loops shared by the sensing operators, Part 1 and BIHT.
//
// Every kernel exists twice: kernels::serial is the reference, kernels::omp
// splits the outer loop across OpenMP threads. Each output element is summed
// in the same order by both, so the two agree bit for bit at any thread count.

#include <cstddef>
#include <cstdint>
#include <span>

#include "twopart/index_set.hpp"

namespace twopart::kernels {

enum class Execution { serial, parallel };

/// Row-major m x n matrix.
template <typename Scalar>
struct DenseView {
  std::span<const Scalar> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::span<const Scalar> row(std::size_t j) const { return entries.subspan(j * cols, cols); }
};

/// Compressed index lists: list j is indices[offsets[j] .. offsets[j+1]).
struct CompressedLists {
  std::span<const std::size_t> offsets;
  std::span<const Index> indices;

  std::size_t count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const Index> list(std::size_t j) const {
    return indices.subspan(offsets[j], offsets[j + 1] - offsets[j]);
  }
};

#define TWOPART_KERNEL_DECLS                                                                  \
  /* out = A x */                                                                            \
  template <typename Scalar>                                                                 \
  void dense_apply(DenseView<Scalar> a, std::span<const double> x, std::span<double> out);  \
  /* out = A^T r; rows with r[j] == 0 are skipped */                                         \
  template <typename Scalar>                                                                 \
  void dense_apply_transposed(DenseView<Scalar> a, std::span<const double> r,               \
                              std::span<double> out);                                        \
  /* out is rows x cols.size(), holding columns cols of A in order */                        \
  template <typename Scalar>                                                                 \
  void gather_columns(DenseView<Scalar> a, std::span<const Index> cols, std::span<Scalar> out); \
  /* out[j] = scale * sum of x over row list j */                                            \
  void sparse_apply(CompressedLists rows, double scale, std::span<const double> x,           \
                    std::span<double> out);                                                  \
  /* counts[i] = number of entries of column list i flagged in mask */                       \
  void count_hits(CompressedLists cols, std::span<const std::uint8_t> mask,                  \
                  std::span<std::size_t> counts);

namespace serial {
TWOPART_KERNEL_DECLS
}

namespace omp {
TWOPART_KERNEL_DECLS
/// Threads the OpenMP runtime would use; 1 when built without OpenMP.
int max_threads();
}

#undef TWOPART_KERNEL_DECLS

template <typename Scalar>
void dense_apply(Execution e, DenseView<Scalar> a, std::span<const double> x,
                 std::span<double> out) {
  e == Execution::parallel ? omp::dense_apply(a, x, out) : serial::dense_apply(a, x, out);
}

template <typename Scalar>
void dense_apply_transposed(Execution e, DenseView<Scalar> a, std::span<const double> r,
                            std::span<double> out) {
  e == Execution::parallel ? omp::dense_apply_transposed(a, r, out)
                           : serial::dense_apply_transposed(a, r, out);
}

template <typename Scalar>
void gather_columns(Execution e, DenseView<Scalar> a, std::span<const Index> cols,
                    std::span<Scalar> out) {
  e == Execution::parallel ? omp::gather_columns(a, cols, out)
                           : serial::gather_columns(a, cols, out);
}

inline void sparse_apply(Execution e, CompressedLists rows, double scale,
                         std::span<const double> x, std::span<double> out) {
  e == Execution::parallel ? omp::sparse_apply(rows, scale, x, out)
                           : serial::sparse_apply(rows, scale, x, out);
}

inline void count_hits(Execution e, CompressedLists cols, std::span<const std::uint8_t> mask,
                       std::span<std::size_t> counts) {
  e == Execution::parallel ? omp::count_hits(cols, mask, counts)
                           : serial::count_hits(cols, mask, counts);
}

}  // namespace twopart::kernels
