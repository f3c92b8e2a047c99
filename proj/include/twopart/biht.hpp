#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twopart/sensing.hpp"

namespace twopart {

enum class BihtVariant { one_sided_l1, one_sided_l2 };

struct BihtConfig {
  std::size_t sparsity = 1;
  /// Unset means the variant default: 1 for l1, 1/m for l2.
  std::optional<double> step_size;
  std::size_t max_iterations = 100;
  BihtVariant variant = BihtVariant::one_sided_l1;
  bool stop_on_consistency = true;
  Execution execution = Execution::serial;

  double resolved_step(std::size_t measurements) const;
  void validate() const;
};

struct SolverTrace {
  std::size_t iterations_run = 0;
  /// sign(A xhat) == y for the returned (normalized) estimate.
  bool consistent = false;
  /// Sign mismatches of each iterate against y.
  std::vector<std::size_t> hamming_errors_per_iteration;
  /// Sign mismatches of the returned estimate.
  std::size_t final_hamming_errors = 0;
};

struct BihtResult {
  std::vector<double> xhat;
  SolverTrace trace;
};

/// Keeps the k largest-magnitude entries and zeroes the rest. Among equal
/// magnitudes the lower index wins. k >= size is the identity.
std::vector<double> hard_threshold(std::span<const double> a, std::size_t k);
void hard_threshold_in_place(std::span<double> a, std::size_t k);

/// Binary iterative hard thresholding from a zero start.
///
///   l1: a <- H_k(a + (tau/2) A^T (y - sign(A a)))
///   l2: a <- H_k(a - tau A^T (y .* min(y .* A a, 0)))
///
/// The sign inside the l1 step maps 0 to 0, so the first iterate is the
/// matched filter H_k((tau/2) A^T y). The l2 gradient vanishes at a = 0;
/// while the iterate is zero the l2 variant takes that same matched-filter
/// step. The result is scaled to unit norm; a zero iterate is returned as
/// zero and reported inconsistent.
template <typename Scalar>
BihtResult biht(const DenseMatrix<Scalar>& a, const BitMeasurements& y, const BihtConfig& config);

struct Consistency {
  bool consistent = false;
  std::size_t hamming_errors = 0;
};

/// Compares sign(A xhat), with sign(0) = +1, against y.
template <typename Scalar>
Consistency consistency_check(const DenseMatrix<Scalar>& a, const BitMeasurements& y,
                              std::span<const double> xhat, Execution exec = Execution::serial);

/// 1/2 sum_j min(y_j (A a)_j, 0)^2
template <typename Scalar>
double one_sided_l2_objective(const DenseMatrix<Scalar>& a, const BitMeasurements& y,
                              std::span<const double> x);

}  // namespace twopart
