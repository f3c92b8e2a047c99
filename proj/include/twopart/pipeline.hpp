#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "twopart/biht.hpp"
#include "twopart/index_set.hpp"
#include "twopart/model.hpp"
#include "twopart/sensing.hpp"

namespace twopart {

/// Storage precision for the dense Gaussian matrices.
enum class Precision { float64, float32 };

struct TwoPartSeeds {
  Seed signal = 1;
  Seed matrix1 = 2;
  Seed matrix2 = 3;
  Seed noise1 = 4;
  Seed noise2 = 5;
};

struct TwoPartConfig {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  double p = 1.0;
  double epsilon = 0.0;
  std::size_t zero_threshold = 3;
  double noise_variance = 0.0;
  BihtConfig biht;
  TwoPartSeeds seeds;
  Precision precision = Precision::float64;

  bool noiseless() const { return noise_variance == 0.0; }
  void validate() const;
};

struct DirectSeeds {
  Seed signal = 1;
  Seed matrix = 3;
  Seed noise = 5;
};

struct DirectConfig {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  double noise_variance = 0.0;
  BihtConfig biht;
  DirectSeeds seeds;
  Precision precision = Precision::float64;

  void validate() const;
};

struct RunResult {
  std::vector<double> xhat;
  ReconstructionReport report;
};

/// Columns t of a, in order. Throws EmptyResidual when t is empty.
template <typename Scalar>
DenseMatrix<Scalar> reduce_columns(const DenseMatrix<Scalar>& a, const IndexSet& t,
                                   Execution exec = Execution::serial);

/// Length-n vector holding xhat2 at positions t and zeros elsewhere.
std::vector<double> embed_solution(std::span<const double> xhat2, const IndexSet& t,
                                   std::size_t n);

/// Sparse-binary Part 1 followed by BIHT on the surviving columns.
///
/// Matrix generation, measurement and quantization model acquisition and are
/// not timed; runtime_seconds covers zero identification, column reduction,
/// the BIHT solve and the final embedding. y2 is handed to BIHT unchanged.
RunResult run_two_part(const TwoPartConfig& config);

/// BIHT on the full problem with one m x n Gaussian matrix. Only the solve is timed.
RunResult run_direct(const DirectConfig& config);

}  // namespace twopart
