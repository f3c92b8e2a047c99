#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "twopart/index_set.hpp"
#include "twopart/rng.hpp"

namespace twopart {

/// Length-n vector with exactly k nonzeros and unit Euclidean norm.
class SparseSignal {
 public:
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t sparsity() const noexcept { return support_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  const IndexSet& support() const noexcept { return support_; }

  /// Takes ownership of a vector; throws unless it is nonzero-count k
  /// and unit norm within 1e-12.
  static SparseSignal from_values(std::vector<double> values);

 private:
  friend SparseSignal generate_signal(std::size_t, std::size_t, Seed);
  std::vector<double> values_;
  IndexSet support_;
};

/// Random k-sparse unit-norm signal.
///
/// Support positions come from a partial Fisher-Yates shuffle of 0..n-1; the
/// amplitudes are then drawn i.i.d. standard normal from the same stream in
/// shuffle order, and the vector is rescaled to unit norm.
SparseSignal generate_signal(std::size_t n, std::size_t k, Seed seed);

/// SNR of a perfect reconstruction.
inline constexpr double kExactRecovery = std::numeric_limits<double>::infinity();

/// 10 log10(|x|^2 / |x - xhat|^2); kExactRecovery when xhat == x.
double snr_db(std::span<const double> x, std::span<const double> xhat);

inline bool is_exact_recovery(double snr) { return snr == kExactRecovery; }

struct SupportMetrics {
  std::size_t zero_identified = 0;
  std::size_t false_zeros = 0;
};

SupportMetrics support_metrics(std::span<const double> x, const IndexSet& zero_set);

struct ReconstructionReport {
  double snr_db = 0.0;
  double runtime_seconds = 0.0;
  std::size_t part1_zero_identified = 0;
  std::size_t part1_false_zeros = 0;
  std::size_t residual_problem_size = 0;
  std::size_t iterations_used = 0;
  bool consistent = false;
  /// Fraction of the true zeros that Part 1 identified.
  double part1_zero_fraction = 0.0;
  /// Part 1 resolved every coefficient and Part 2 was skipped.
  bool empty_residual = false;
};

}  // namespace twopart
