#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "twopart/error.hpp"
#include "twopart/model.hpp"
#include "twopart/sensing.hpp"

namespace twopart {
namespace {

std::vector<std::vector<Index>> rebuild_columns(const SparseBinaryMatrix& a) {
  std::vector<std::vector<Index>> cols(a.cols());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    for (Index i : a.row_support(j)) cols[i].push_back(j);
  }
  return cols;
}

TEST(BernoulliMatrix, FullDensity) {
  const auto a = gen_bernoulli_matrix(4, 6, 1.0, 3);
  EXPECT_EQ(a.scale(), 1.0);
  for (std::size_t j = 0; j < a.rows(); ++j) {
    ASSERT_EQ(a.row_support(j).size(), 6u);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(a.row_support(j)[i], i);
  }
}

TEST(BernoulliMatrix, RowWeightConcentration) {
  const double p = 1.0 / 50.0;
  const auto a = gen_bernoulli_matrix(2000, 10000, p, 8);
  const double mean_row = static_cast<double>(a.nonzeros()) / a.rows();
  EXPECT_NEAR(mean_row, 10000 * p, 0.05 * 10000 * p);
  EXPECT_DOUBLE_EQ(a.scale() * a.scale(), 1.0 / p);
}

TEST(BernoulliMatrix, TransposeConsistency) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng.index(80);
    const std::size_t cols = 1 + rng.index(120);
    const double p = 0.01 + 0.5 * rng.uniform01();
    const auto a = gen_bernoulli_matrix(rows, cols, p, rng.next_u64());
    const auto rebuilt = rebuild_columns(a);
    for (std::size_t i = 0; i < cols; ++i) {
      const auto stored = a.col_support(i);
      ASSERT_EQ(std::vector<Index>(stored.begin(), stored.end()), rebuilt[i]);
    }
  }
}

TEST(BernoulliMatrix, RejectsBadProbability) {
  EXPECT_THROW(gen_bernoulli_matrix(3, 3, 0.0, 1), InvalidParameter);
  EXPECT_THROW(gen_bernoulli_matrix(3, 3, 1.5, 1), InvalidParameter);
  EXPECT_THROW(gen_bernoulli_matrix(3, 3, -0.1, 1), InvalidParameter);
}

TEST(BernoulliMatrix, MoreRowsExtendFewerRows) {
  const auto small = gen_bernoulli_matrix(10, 50, 0.1, 77);
  const auto large = gen_bernoulli_matrix(25, 50, 0.1, 77);
  for (std::size_t j = 0; j < small.rows(); ++j) {
    const auto a = small.row_support(j);
    const auto b = large.row_support(j);
    ASSERT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST(BernoulliMatrix, ConstructorValidatesSupports) {
  EXPECT_THROW(SparseBinaryMatrix(1, 3, 1.0, {{2, 1}}), InvalidParameter);
  EXPECT_THROW(SparseBinaryMatrix(1, 3, 1.0, {{3}}), InvalidParameter);
  EXPECT_THROW(SparseBinaryMatrix(2, 3, 1.0, {{0}}), InvalidParameter);
}

TEST(GaussianMatrix, Moments) {
  const auto a = gen_gaussian_matrix(1000, 1000, 12);
  double sum = 0.0;
  double sq = 0.0;
  for (double v : a.entries()) {
    sum += v;
    sq += v * v;
  }
  const double count = 1e6;
  const double mean = sum / count;
  const double var = sq / count - mean * mean;
  EXPECT_LE(std::abs(mean), 4.0 / std::sqrt(count));
  EXPECT_NEAR(var, 1.0, 0.05);
}

TEST(GaussianMatrix, DeterministicAndSeedSensitive) {
  const auto a = gen_gaussian_matrix(30, 40, 1);
  const auto b = gen_gaussian_matrix(30, 40, 1);
  const auto c = gen_gaussian_matrix(30, 40, 2);
  EXPECT_TRUE(std::equal(a.entries().begin(), a.entries().end(), b.entries().begin()));
  EXPECT_FALSE(std::equal(a.entries().begin(), a.entries().end(), c.entries().begin()));
  EXPECT_THROW(gen_gaussian_matrix(0, 4, 1), InvalidParameter);
  EXPECT_THROW(gen_gaussian_matrix(4, 0, 1), InvalidParameter);
}

TEST(GaussianMatrix, FloatStorageRoundsDoubleEntries) {
  const auto d = gen_gaussian_matrix<double>(5, 7, 3);
  const auto f = gen_gaussian_matrix<float>(5, 7, 3);
  for (std::size_t t = 0; t < d.entries().size(); ++t) {
    ASSERT_EQ(f.entries()[t], static_cast<float>(d.entries()[t]));
  }
}

TEST(Measure, FullDensityRowSums) {
  const auto a = gen_bernoulli_matrix(2, 3, 1.0, 1);
  const auto y = measure(a, std::vector<double>{1, 2, 3}, 0.0, 0);
  EXPECT_EQ(y, (std::vector<double>{6.0, 6.0}));
}

TEST(Measure, DenseIdentity) {
  const DenseGaussianMatrix eye(2, 2, {1.0, 0.0, 0.0, 1.0});
  const auto y = measure(eye, std::vector<double>{0.25, -3.5}, 0.0, 0);
  EXPECT_EQ(y, (std::vector<double>{0.25, -3.5}));
}

TEST(Measure, SparseMatchesDenseMaterialization) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = gen_bernoulli_matrix(50, 200, 0.02 + 0.3 * rng.uniform01(), rng.next_u64());
    std::vector<double> x(200);
    for (double& v : x) v = rng.normal();
    const auto expected = testing::dense_product(testing::materialize(a), 50, 200, x);
    const auto got = measure(a, x, 0.0, 0);
    for (std::size_t j = 0; j < 50; ++j) ASSERT_NEAR(got[j], expected[j], 1e-10);
  }
}

TEST(Measure, ZeroNoiseIsLinear) {
  Rng rng(41);
  const auto sparse = gen_bernoulli_matrix(40, 60, 0.2, 1);
  const auto dense = gen_gaussian_matrix(40, 60, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(60);
    std::vector<double> z(60);
    for (double& v : x) v = rng.normal();
    for (double& v : z) v = rng.normal();
    const double a = rng.normal();
    const double b = rng.normal();
    std::vector<double> combo(60);
    for (std::size_t i = 0; i < 60; ++i) combo[i] = a * x[i] + b * z[i];
    const auto check = [&](const auto& phi) {
      const auto lhs = measure(phi, combo, 0.0, 0);
      const auto yx = measure(phi, x, 0.0, 0);
      const auto yz = measure(phi, z, 0.0, 0);
      for (std::size_t j = 0; j < lhs.size(); ++j) ASSERT_NEAR(lhs[j], a * yx[j] + b * yz[j], 1e-10);
    };
    check(sparse);
    check(dense);
  }
}

TEST(Measure, NoiseHasRequestedVariance) {
  const auto a = gen_bernoulli_matrix(50000, 4, 1.0, 1);
  const std::vector<double> zero(4, 0.0);
  const auto y = measure(a, zero, 0.01, 123);
  double sq = 0.0;
  for (double v : y) sq += v * v;
  EXPECT_NEAR(sq / y.size(), 0.01, 0.0005);
  EXPECT_EQ(y, measure(a, zero, 0.01, 123));
  EXPECT_NE(y, measure(a, zero, 0.01, 124));
}

TEST(Measure, Errors) {
  const auto a = gen_bernoulli_matrix(2, 3, 0.5, 1);
  EXPECT_THROW(measure(a, std::vector<double>(4), 0.0, 0), InvalidParameter);
  EXPECT_THROW(measure(a, std::vector<double>(3), -1.0, 0), InvalidParameter);
  const auto d = gen_gaussian_matrix(2, 3, 1);
  EXPECT_THROW(measure(d, std::vector<double>(2), 0.0, 0), InvalidParameter);
}

TEST(QuantizeSign, Examples) {
  EXPECT_EQ(quantize_sign(std::vector<double>{0.3, -2.0, 0.0}),
            BitMeasurements(Alphabet::sign, {1, -1, 1}));
  const auto neg = quantize_sign(std::vector<double>{-1.0, -0.5, -1e-300});
  for (auto b : neg.bits()) EXPECT_EQ(b, -1);
}

TEST(QuantizeSign, IdempotentOnSignValues) {
  const auto bits = quantize_sign(std::vector<double>{0.3, -2.0, 0.0, 5.0, -0.1});
  std::vector<double> as_real(bits.bits().begin(), bits.bits().end());
  EXPECT_EQ(quantize_sign(as_real), bits);
}

TEST(QuantizeMagnitude, Examples) {
  const auto bits = quantize_magnitude(std::vector<double>{0.5, -0.05, 0.0}, 0.1);
  EXPECT_EQ(bits.alphabet(), Alphabet::magnitude);
  EXPECT_EQ(bits, BitMeasurements(Alphabet::magnitude, {1, 0, 0}));
  // |y| == epsilon counts as small.
  EXPECT_EQ(quantize_magnitude(std::vector<double>{0.1, -0.1}, 0.1),
            BitMeasurements(Alphabet::magnitude, {0, 0}));
  EXPECT_EQ(quantize_magnitude(std::vector<double>{0.0, 1e-300, -1e-300}, 0.0),
            BitMeasurements(Alphabet::magnitude, {0, 1, 1}));
  EXPECT_THROW(quantize_magnitude(std::vector<double>{1.0}, -0.1), InvalidParameter);
}

TEST(BitMeasurements, AlphabetIsEnforced) {
  EXPECT_THROW(BitMeasurements(Alphabet::sign, {1, 0}), InvalidParameter);
  EXPECT_THROW(BitMeasurements(Alphabet::magnitude, {1, -1}), InvalidParameter);
}

TEST(Sensing, NoiselessZeroBitsOnlyOnAllZeroRows) {
  for (Seed seed = 0; seed < 30; ++seed) {
    const auto x = generate_signal(300, 6, seed);
    const auto a = gen_bernoulli_matrix(80, 300, 1.0 / 6.0, seed + 1000);
    const auto bits = quantize_magnitude(measure(a, x.values(), 0.0, 0), 0.0);
    for (std::size_t j = 0; j < a.rows(); ++j) {
      bool touches_nonzero = false;
      for (Index i : a.row_support(j)) touches_nonzero |= x.values()[i] != 0.0;
      ASSERT_EQ(bits[j] == 0, !touches_nonzero) << "seed " << seed << " row " << j;
    }
  }
}

}  // namespace
}  // namespace twopart
