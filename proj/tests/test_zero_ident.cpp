#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "twopart/error.hpp"
#include "twopart/model.hpp"
#include "twopart/zero_ident.hpp"

namespace twopart {
namespace {

// Three coefficients over four measurements (0-based indices).
const std::vector<std::vector<Index>> kCols{{0, 1, 2}, {0, 3}, {1, 2, 3}};

TEST(SmallMeasurementSet, Examples) {
  EXPECT_EQ(small_measurement_set(BitMeasurements(Alphabet::magnitude, {1, 0, 1, 0})),
            IndexSet({1, 3}));
  EXPECT_TRUE(small_measurement_set(BitMeasurements(Alphabet::magnitude, {1, 1, 1})).empty());
  EXPECT_EQ(small_measurement_set(BitMeasurements(Alphabet::magnitude, {0, 0, 0, 0})),
            IndexSet::range(4));
  EXPECT_THROW(small_measurement_set(BitMeasurements(Alphabet::sign, {1, -1})), InvalidParameter);
}

TEST(IdentifyZeros, ThresholdThree) {
  const auto r = identify_zeros(kCols, 4, IndexSet({0, 1, 2}), 3);
  EXPECT_EQ(r.zero_set, IndexSet({0}));
  EXPECT_EQ(r.residual_set, IndexSet({1, 2}));
}

TEST(IdentifyZeros, ThresholdOne) {
  const auto r = identify_zeros(kCols, 4, IndexSet({0, 1, 2}), 1);
  EXPECT_EQ(r.zero_set, IndexSet({0, 1, 2}));
  EXPECT_TRUE(r.residual_set.empty());
}

TEST(IdentifyZeros, EmptySmallSetKeepsEverything) {
  const auto r = identify_zeros(kCols, 4, IndexSet{}, 1);
  EXPECT_TRUE(r.zero_set.empty());
  EXPECT_EQ(r.residual_set, IndexSet::range(3));
}

TEST(IdentifyZeros, UnmeasuredCoefficientStaysResidual) {
  const std::vector<std::vector<Index>> cols{{0}, {}, {1}};
  const auto r = identify_zeros(cols, 2, IndexSet({0, 1}), 1);
  EXPECT_EQ(r.zero_set, IndexSet({0, 2}));
  EXPECT_EQ(r.residual_set, IndexSet({1}));
}

TEST(IdentifyZeros, Errors) {
  EXPECT_THROW(identify_zeros(kCols, 4, IndexSet({0}), 0), InvalidParameter);
  EXPECT_THROW(identify_zeros(kCols, 4, IndexSet({4}), 1), InvalidParameter);
  EXPECT_THROW(identify_zeros(kCols, 3, IndexSet({0}), 1), InvalidParameter);
}

struct RandomInstance {
  SparseBinaryMatrix matrix;
  std::vector<Index> s;
};

RandomInstance random_instance(Rng& rng) {
  const std::size_t n = 1 + rng.index(50);
  const std::size_t m = 1 + rng.index(100);
  auto a = gen_bernoulli_matrix(m, n, 0.02 + 0.6 * rng.uniform01(), rng.next_u64());
  std::vector<Index> s;
  const double density = rng.uniform01();
  for (Index j = 0; j < m; ++j) {
    if (rng.uniform01() < density) s.push_back(j);
  }
  return {std::move(a), std::move(s)};
}

TEST(IdentifyZeros, MatchesBruteForceOracle) {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_instance(rng);
    const std::size_t threshold = 1 + rng.index(4);
    const auto r = identify_zeros(inst.matrix, IndexSet(inst.s), threshold);
    std::vector<Index> zeros;
    std::vector<Index> residual;
    for (Index i = 0; i < inst.matrix.cols(); ++i) {
      const auto col = inst.matrix.col_support(i);
      const auto hits =
          testing::brute_intersection(std::vector<Index>(col.begin(), col.end()), inst.s);
      (hits >= threshold ? zeros : residual).push_back(i);
    }
    ASSERT_EQ(r.zero_set, IndexSet(zeros)) << "trial " << trial;
    ASSERT_EQ(r.residual_set, IndexSet(residual)) << "trial " << trial;
  }
}

TEST(IdentifyZeros, PartitionsCoefficients) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_instance(rng);
    const auto r = identify_zeros(inst.matrix, IndexSet(inst.s), 1 + rng.index(3));
    std::vector<Index> merged;
    std::merge(r.zero_set.begin(), r.zero_set.end(), r.residual_set.begin(), r.residual_set.end(),
               std::back_inserter(merged));
    ASSERT_EQ(IndexSet(merged), IndexSet::range(inst.matrix.cols()));
  }
}

bool subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

TEST(IdentifyZeros, MonotoneInThreshold) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_instance(rng);
    const IndexSet s(inst.s);
    for (std::size_t t = 1; t < 5; ++t) {
      ASSERT_TRUE(subset(identify_zeros(inst.matrix, s, t + 1).zero_set,
                         identify_zeros(inst.matrix, s, t).zero_set));
    }
  }
}

TEST(IdentifyZeros, MonotoneInSmallSet) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_instance(rng);
    std::vector<Index> smaller;
    for (Index j : inst.s) {
      if (rng.uniform01() < 0.6) smaller.push_back(j);
    }
    const std::size_t t = 1 + rng.index(3);
    ASSERT_TRUE(subset(identify_zeros(inst.matrix, IndexSet(smaller), t).zero_set,
                       identify_zeros(inst.matrix, IndexSet(inst.s), t).zero_set));
  }
}

TEST(IdentifyZeros, ParallelMatchesSerial) {
  const auto a = gen_bernoulli_matrix(400, 3000, 0.05, 5);
  std::vector<Index> s;
  for (Index j = 0; j < 400; j += 3) s.push_back(j);
  const auto serial = identify_zeros(a, IndexSet(s), 3, Execution::serial);
  const auto parallel = identify_zeros(a, IndexSet(s), 3, Execution::parallel);
  EXPECT_EQ(serial.zero_set, parallel.zero_set);
  EXPECT_EQ(serial.residual_set, parallel.residual_set);
}

TEST(IdentifyZeros, NoiselessRuleNeverDropsNonzeros) {
  for (Seed seed = 0; seed < 100; ++seed) {
    const auto x = generate_signal(500, 5, seed);
    const auto a = gen_bernoulli_matrix(120, 500, 0.2, derive_seed(seed, 1));
    const auto bits = quantize_magnitude(measure(a, x.values(), 0.0, 0), 0.0);
    const auto r = identify_zeros(a, small_measurement_set(bits), kNoiselessZeroThreshold);
    ASSERT_EQ(support_metrics(x.values(), r.zero_set).false_zeros, 0u) << "seed " << seed;
  }
}

}  // namespace
}  // namespace twopart
