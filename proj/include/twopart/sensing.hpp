#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "twopart/kernels.hpp"
#include "twopart/rng.hpp"

namespace twopart {

using kernels::Execution;

/// m1 x n matrix whose nonzero entries all equal `scale`.
///
/// Stored twice, as row supports (for measuring) and column supports (for
/// Part 1 zero identification). Both are sorted and describe the same entries.
class SparseBinaryMatrix {
 public:
  /// Builds both support structures from per-row index lists.
  SparseBinaryMatrix(std::size_t rows, std::size_t cols, double scale,
                     const std::vector<std::vector<Index>>& row_supports);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double scale() const noexcept { return scale_; }
  std::size_t nonzeros() const noexcept { return row_indices_.size(); }

  std::span<const Index> row_support(std::size_t j) const { return row_lists().list(j); }
  std::span<const Index> col_support(std::size_t i) const { return col_lists().list(i); }

  kernels::CompressedLists row_lists() const noexcept { return {row_offsets_, row_indices_}; }
  kernels::CompressedLists col_lists() const noexcept { return {col_offsets_, col_indices_}; }

 private:
  SparseBinaryMatrix() = default;
  friend SparseBinaryMatrix gen_bernoulli_matrix(std::size_t, std::size_t, double, Seed);
  void build_columns();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  double scale_ = 1.0;
  std::vector<std::size_t> row_offsets_;
  std::vector<Index> row_indices_;
  std::vector<std::size_t> col_offsets_;
  std::vector<Index> col_indices_;
};

/// Each entry present independently with probability p, valued 1/sqrt(p).
/// Entries are drawn row-major from one stream, so a matrix with more rows
/// extends one with fewer rows built from the same seed.
SparseBinaryMatrix gen_bernoulli_matrix(std::size_t rows, std::size_t cols, double p, Seed seed);

/// Row-major dense matrix. Scalar picks the storage precision (double or
/// float); arithmetic on it is always carried out in double.
template <typename Scalar>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, Seed seed = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Seed seed() const noexcept { return seed_; }
  Scalar at(std::size_t j, std::size_t i) const { return entries_[j * cols_ + i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  kernels::DenseView<Scalar> view() const noexcept { return {entries_, rows_, cols_}; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
  Seed seed_;
};

using DenseGaussianMatrix = DenseMatrix<double>;

/// i.i.d. N(0,1) entries drawn row-major in double, then stored as Scalar.
template <typename Scalar = double>
DenseMatrix<Scalar> gen_gaussian_matrix(std::size_t rows, std::size_t cols, Seed seed);

/// y = A x + z, z ~ N(0, noise_variance) i.i.d., drawn in row order from noise_seed.
std::vector<double> measure(const SparseBinaryMatrix& a, std::span<const double> x,
                            double noise_variance, Seed noise_seed,
                            Execution exec = Execution::serial);

template <typename Scalar>
std::vector<double> measure(const DenseMatrix<Scalar>& a, std::span<const double> x,
                            double noise_variance, Seed noise_seed,
                            Execution exec = Execution::serial);

enum class Alphabet { magnitude, sign };

/// One bit per measurement: {0,1} magnitude bits or {-1,+1} sign bits.
class BitMeasurements {
 public:
  BitMeasurements(Alphabet alphabet, std::vector<std::int8_t> bits);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return bits_.size(); }
  std::int8_t operator[](std::size_t j) const { return bits_[j]; }
  std::span<const std::int8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const BitMeasurements&, const BitMeasurements&) = default;

 private:
  Alphabet alphabet_;
  std::vector<std::int8_t> bits_;
};

/// sign with sign(0) = +1.
inline std::int8_t sign_bit(double v) { return v >= 0.0 ? 1 : -1; }

BitMeasurements quantize_sign(std::span<const double> y);

/// 0 where |y| <= epsilon, 1 otherwise.
BitMeasurements quantize_magnitude(std::span<const double> y, double epsilon);

}  // namespace twopart
