#include <algorithm>

#include "twopart/kernels.hpp"

namespace twopart::kernels::serial {

template <typename Scalar>
void dense_apply(DenseView<Scalar> a, std::span<const double> x, std::span<double> out) {
  for (std::size_t j = 0; j < a.rows; ++j) {
    const auto row = a.row(j);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.cols; ++i) acc += static_cast<double>(row[i]) * x[i];
    out[j] = acc;
  }
}

template <typename Scalar>
void dense_apply_transposed(DenseView<Scalar> a, std::span<const double> r,
                            std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t j = 0; j < a.rows; ++j) {
    const double rj = r[j];
    if (rj == 0.0) continue;
    const auto row = a.row(j);
    for (std::size_t i = 0; i < a.cols; ++i) out[i] += rj * static_cast<double>(row[i]);
  }
}

template <typename Scalar>
void gather_columns(DenseView<Scalar> a, std::span<const Index> cols, std::span<Scalar> out) {
  const std::size_t width = cols.size();
  for (std::size_t j = 0; j < a.rows; ++j) {
    const auto row = a.row(j);
    for (std::size_t c = 0; c < width; ++c) out[j * width + c] = row[cols[c]];
  }
}

void sparse_apply(CompressedLists rows, double scale, std::span<const double> x,
                  std::span<double> out) {
  for (std::size_t j = 0; j < rows.count(); ++j) {
    double acc = 0.0;
    for (Index i : rows.list(j)) acc += x[i];
    out[j] = scale * acc;
  }
}

void count_hits(CompressedLists cols, std::span<const std::uint8_t> mask,
                std::span<std::size_t> counts) {
  for (std::size_t i = 0; i < cols.count(); ++i) {
    std::size_t c = 0;
    for (Index j : cols.list(i)) c += mask[j];
    counts[i] = c;
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

}  // namespace twopart::kernels::serial
