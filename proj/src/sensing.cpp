#include "twopart/sensing.hpp"

#include <cmath>

#include "twopart/error.hpp"

namespace twopart {

SparseBinaryMatrix::SparseBinaryMatrix(std::size_t rows, std::size_t cols, double scale,
                                       const std::vector<std::vector<Index>>& row_supports)
    : rows_(rows), cols_(cols), scale_(scale) {
  require(row_supports.size() == rows, "row support count must equal row count");
  require(scale > 0.0, "scale must be positive");
  row_offsets_.reserve(rows + 1);
  row_offsets_.push_back(0);
  for (const auto& support : row_supports) {
    for (std::size_t t = 0; t < support.size(); ++t) {
      require(support[t] < cols, "row support index out of range");
      require(t == 0 || support[t - 1] < support[t], "row support must be strictly increasing");
      row_indices_.push_back(support[t]);
    }
    row_offsets_.push_back(row_indices_.size());
  }
  build_columns();
}

void SparseBinaryMatrix::build_columns() {
  col_offsets_.assign(cols_ + 1, 0);
  for (Index i : row_indices_) ++col_offsets_[i + 1];
  for (std::size_t i = 0; i < cols_; ++i) col_offsets_[i + 1] += col_offsets_[i];
  col_indices_.resize(row_indices_.size());
  std::vector<std::size_t> cursor(col_offsets_.begin(), col_offsets_.end() - 1);
  for (std::size_t j = 0; j < rows_; ++j) {
    for (std::size_t t = row_offsets_[j]; t < row_offsets_[j + 1]; ++t) {
      col_indices_[cursor[row_indices_[t]]++] = j;
    }
  }
}

SparseBinaryMatrix gen_bernoulli_matrix(std::size_t rows, std::size_t cols, double p, Seed seed) {
  require(p > 0.0 && p <= 1.0, "Bernoulli parameter must lie in (0, 1]");
  Rng rng(seed);
  SparseBinaryMatrix out;
  out.rows_ = rows;
  out.cols_ = cols;
  out.scale_ = 1.0 / std::sqrt(p);
  out.row_offsets_.reserve(rows + 1);
  out.row_offsets_.push_back(0);
  out.row_indices_.reserve(static_cast<std::size_t>(static_cast<double>(rows * cols) * p * 1.1) + 16);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t i = 0; i < cols; ++i) {
      if (rng.uniform01() < p) out.row_indices_.push_back(i);
    }
    out.row_offsets_.push_back(out.row_indices_.size());
  }
  out.build_columns();
  return out;
}

template <typename Scalar>
DenseMatrix<Scalar>::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries,
                                 Seed seed)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), seed_(seed) {
  require(entries_.size() == rows * cols, "dense matrix entry count must be rows * cols");
}

template <typename Scalar>
DenseMatrix<Scalar> gen_gaussian_matrix(std::size_t rows, std::size_t cols, Seed seed) {
  require(rows >= 1 && cols >= 1, "gaussian matrix dimensions must be positive");
  Rng rng(seed);
  std::vector<Scalar> entries(rows * cols);
  for (auto& e : entries) e = static_cast<Scalar>(rng.normal());
  return DenseMatrix<Scalar>(rows, cols, std::move(entries), seed);
}

namespace {

void add_noise(std::span<double> y, double noise_variance, Seed noise_seed) {
  require(noise_variance >= 0.0, "noise variance must be nonnegative");
  if (noise_variance == 0.0) return;
  const double sigma = std::sqrt(noise_variance);
  Rng rng(noise_seed);
  for (double& v : y) v += sigma * rng.normal();
}

}  // namespace

std::vector<double> measure(const SparseBinaryMatrix& a, std::span<const double> x,
                            double noise_variance, Seed noise_seed, Execution exec) {
  require(x.size() == a.cols(), "measure: signal length must equal column count");
  require(noise_variance >= 0.0, "noise variance must be nonnegative");
  std::vector<double> y(a.rows());
  kernels::sparse_apply(exec, a.row_lists(), a.scale(), x, y);
  add_noise(y, noise_variance, noise_seed);
  return y;
}

template <typename Scalar>
std::vector<double> measure(const DenseMatrix<Scalar>& a, std::span<const double> x,
                            double noise_variance, Seed noise_seed, Execution exec) {
  require(x.size() == a.cols(), "measure: signal length must equal column count");
  require(noise_variance >= 0.0, "noise variance must be nonnegative");
  std::vector<double> y(a.rows());
  kernels::dense_apply(exec, a.view(), x, std::span<double>(y));
  add_noise(y, noise_variance, noise_seed);
  return y;
}

BitMeasurements::BitMeasurements(Alphabet alphabet, std::vector<std::int8_t> bits)
    : alphabet_(alphabet), bits_(std::move(bits)) {
  for (auto b : bits_) {
    const bool ok = alphabet_ == Alphabet::magnitude ? (b == 0 || b == 1) : (b == -1 || b == 1);
    require(ok, "bit value outside the declared alphabet");
  }
}

BitMeasurements quantize_sign(std::span<const double> y) {
  std::vector<std::int8_t> bits(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) bits[j] = sign_bit(y[j]);
  return BitMeasurements(Alphabet::sign, std::move(bits));
}

BitMeasurements quantize_magnitude(std::span<const double> y, double epsilon) {
  require(epsilon >= 0.0, "epsilon must be nonnegative");
  std::vector<std::int8_t> bits(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) bits[j] = std::abs(y[j]) <= epsilon ? 0 : 1;
  return BitMeasurements(Alphabet::magnitude, std::move(bits));
}

template class DenseMatrix<double>;
template class DenseMatrix<float>;
template DenseMatrix<double> gen_gaussian_matrix<double>(std::size_t, std::size_t, Seed);
template DenseMatrix<float> gen_gaussian_matrix<float>(std::size_t, std::size_t, Seed);
template std::vector<double> measure<double>(const DenseMatrix<double>&, std::span<const double>,
                                             double, Seed, Execution);
template std::vector<double> measure<float>(const DenseMatrix<float>&, std::span<const double>,
                                            double, Seed, Execution);

}  // namespace twopart
