#include <gtest/gtest.h>

#include <vector>

#if defined(TWOPART_HAVE_OPENMP)
#include <omp.h>
#endif

#include "twopart/kernels.hpp"
#include "twopart/rng.hpp"
#include "twopart/sensing.hpp"

namespace twopart {
namespace {

class OmpKernels : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
#if defined(TWOPART_HAVE_OPENMP)
    saved_ = omp_get_max_threads();
    omp_set_num_threads(GetParam());
#endif
  }
  void TearDown() override {
#if defined(TWOPART_HAVE_OPENMP)
    omp_set_num_threads(saved_);
#endif
  }
  int saved_ = 1;
};

std::vector<double> random_vector(std::size_t n, Rng& rng, double zero_fraction = 0.0) {
  std::vector<double> v(n);
  for (double& e : v) e = rng.uniform01() < zero_fraction ? 0.0 : rng.normal();
  return v;
}

TEST_P(OmpKernels, DenseApplyMatchesSerialBitwise) {
  const auto a = gen_gaussian_matrix(137, 211, 4);
  Rng rng(9);
  const auto x = random_vector(211, rng);
  std::vector<double> s(137);
  std::vector<double> p(137);
  kernels::serial::dense_apply(a.view(), x, std::span<double>(s));
  kernels::omp::dense_apply(a.view(), x, std::span<double>(p));
  EXPECT_EQ(s, p);
}

TEST_P(OmpKernels, TransposedApplyMatchesSerialBitwise) {
  const auto a = gen_gaussian_matrix<float>(123, 301, 5);
  Rng rng(10);
  const auto r = random_vector(123, rng, 0.7);
  std::vector<double> s(301);
  std::vector<double> p(301);
  kernels::serial::dense_apply_transposed(a.view(), r, std::span<double>(s));
  kernels::omp::dense_apply_transposed(a.view(), r, std::span<double>(p));
  EXPECT_EQ(s, p);
}

TEST_P(OmpKernels, SparseApplyAndCountsMatchSerial) {
  const auto a = gen_bernoulli_matrix(300, 500, 0.05, 6);
  Rng rng(11);
  const auto x = random_vector(500, rng);
  std::vector<double> s(300);
  std::vector<double> p(300);
  kernels::serial::sparse_apply(a.row_lists(), a.scale(), x, s);
  kernels::omp::sparse_apply(a.row_lists(), a.scale(), x, p);
  EXPECT_EQ(s, p);

  std::vector<std::uint8_t> mask(300);
  for (auto& m : mask) m = rng.uniform01() < 0.3;
  std::vector<std::size_t> cs(500);
  std::vector<std::size_t> cp(500);
  kernels::serial::count_hits(a.col_lists(), mask, cs);
  kernels::omp::count_hits(a.col_lists(), mask, cp);
  EXPECT_EQ(cs, cp);
}

TEST_P(OmpKernels, GatherMatchesSerial) {
  const auto a = gen_gaussian_matrix(40, 90, 7);
  const std::vector<Index> cols{0, 3, 17, 44, 89};
  std::vector<double> s(40 * cols.size());
  std::vector<double> p(40 * cols.size());
  kernels::serial::gather_columns(a.view(), cols, std::span<double>(s));
  kernels::omp::gather_columns(a.view(), cols, std::span<double>(p));
  EXPECT_EQ(s, p);
}

INSTANTIATE_TEST_SUITE_P(ThreadCounts, OmpKernels, ::testing::Values(1, 2, 3, 8));

TEST(SerialKernels, TransposedApplyOnSmallMatrix) {
  // [[1 2 3] [4 5 6]]^T [1, -1] = [-3 -3 -3]
  const std::vector<double> e{1, 2, 3, 4, 5, 6};
  const kernels::DenseView<double> a{e, 2, 3};
  std::vector<double> out(3);
  kernels::serial::dense_apply_transposed(a, std::vector<double>{1.0, -1.0}, std::span<double>(out));
  EXPECT_EQ(out, (std::vector<double>{-3.0, -3.0, -3.0}));
}

}  // namespace
}  // namespace twopart
