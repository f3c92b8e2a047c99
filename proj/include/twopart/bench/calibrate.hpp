#pragma once

#include <cstddef>

#include "twopart/rng.hpp"

namespace twopart::bench {

/// Part 1 setup shared by the calibration searches.
struct Part1Problem {
  std::size_t n = 0;
  std::size_t k = 0;
  double p = 1.0;
  double epsilon = 0.0;
  double noise_variance = 0.0;
  std::size_t zero_threshold = 3;
};

/// m1 = ceil(c1 k log2(n/k)).
std::size_t part1_measurements(double c1, std::size_t n, std::size_t k);

/// Mean fraction of true zeros identified by Part 1 over `trials` runs.
/// Trial t uses the same signal, matrix and noise seeds for every m1, so
/// results at different m1 use common random numbers.
double mean_zero_fraction(const Part1Problem& problem, std::size_t m1, std::size_t trials,
                          Seed seed);

struct C1Calibration {
  double c1 = 0.0;
  std::size_t m1 = 0;
  double achieved_fraction = 0.0;
};

/// Smallest c1 on the grid 0.5 * 1.25^g (up to 64) whose mean zero fraction
/// reaches target_fraction. Throws CalibrationFailure with the best fraction
/// seen when no grid point does.
C1Calibration calibrate_c1(const Part1Problem& problem, double target_fraction,
                           std::size_t trials, Seed seed);

struct C2Calibration {
  double c2 = 0.0;
  double achieved_fraction = 0.0;
};

/// c2 on the grid 0.125 * 1.25^g (while c2 / k <= 1) maximizing the mean zero
/// fraction at fixed m1; problem.p is ignored. Ties keep the smaller c2.
C2Calibration calibrate_c2(const Part1Problem& problem, std::size_t m1, std::size_t trials,
                           Seed seed);

}  // namespace twopart::bench
