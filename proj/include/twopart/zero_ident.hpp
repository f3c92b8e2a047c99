#pragma once

#include <cstddef>
#include <vector>

#include "twopart/index_set.hpp"
#include "twopart/kernels.hpp"
#include "twopart/sensing.hpp"

namespace twopart {

/// Outcome of Part 1. zero_set and residual_set partition 0..n-1.
struct Part1Result {
  IndexSet zero_set;
  IndexSet residual_set;
  IndexSet s_set;
};

inline constexpr std::size_t kNoisyZeroThreshold = 3;
inline constexpr std::size_t kNoiselessZeroThreshold = 1;

/// Indices of measurements whose magnitude bit is 0.
IndexSet small_measurement_set(const BitMeasurements& bits);

/// Coefficient i is declared zero when at least `threshold` entries of its
/// column support fall in s_set. Linear in the total support size: s_set is
/// turned into a mask over the measurement_count rows, then each column is
/// scanned once.
Part1Result identify_zeros(kernels::CompressedLists col_supports, std::size_t measurement_count,
                           const IndexSet& s_set, std::size_t threshold,
                           Execution exec = Execution::serial);

Part1Result identify_zeros(const std::vector<std::vector<Index>>& col_supports,
                           std::size_t measurement_count, const IndexSet& s_set,
                           std::size_t threshold);

inline Part1Result identify_zeros(const SparseBinaryMatrix& a, const IndexSet& s_set,
                                  std::size_t threshold, Execution exec = Execution::serial) {
  return identify_zeros(a.col_lists(), a.rows(), s_set, threshold, exec);
}

}  // namespace twopart
