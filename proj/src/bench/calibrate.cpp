#include "twopart/bench/calibrate.hpp"

#include <cmath>
#include <string>

#include "twopart/error.hpp"
#include "twopart/model.hpp"
#include "twopart/sensing.hpp"
#include "twopart/zero_ident.hpp"

namespace twopart::bench {

namespace {

constexpr double kGridFactor = 1.25;
constexpr double kC1Start = 0.5;
constexpr double kC1Max = 64.0;
constexpr double kC2Start = 0.125;

constexpr std::uint64_t kSignalStream = 0x5167;
constexpr std::uint64_t kMatrixStream = 0x3a71;
constexpr std::uint64_t kNoiseStream = 0x2015;

}  // namespace

std::size_t part1_measurements(double c1, std::size_t n, std::size_t k) {
  require(k >= 1 && k <= n, "part1_measurements: need 1 <= k <= n");
  const double raw = c1 * static_cast<double>(k) *
                     std::log2(static_cast<double>(n) / static_cast<double>(k));
  return static_cast<std::size_t>(std::ceil(raw));
}

double mean_zero_fraction(const Part1Problem& problem, std::size_t m1, std::size_t trials,
                          Seed seed) {
  require(trials >= 1, "calibration needs at least one trial");
  require(problem.k >= 1 && problem.k < problem.n, "calibration needs 1 <= k < n");
  const double zeros = static_cast<double>(problem.n - problem.k);
  double total = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto signal = generate_signal(problem.n, problem.k, derive_seed(seed, kSignalStream, t));
    const auto phi1 =
        gen_bernoulli_matrix(m1, problem.n, problem.p, derive_seed(seed, kMatrixStream, t));
    const auto y1 = measure(phi1, signal.values(), problem.noise_variance,
                            derive_seed(seed, kNoiseStream, t));
    const auto part1 = identify_zeros(
        phi1, small_measurement_set(quantize_magnitude(y1, problem.epsilon)),
        problem.zero_threshold);
    const auto m = support_metrics(signal.values(), part1.zero_set);
    total += static_cast<double>(m.zero_identified - m.false_zeros) / zeros;
  }
  return total / static_cast<double>(trials);
}

C1Calibration calibrate_c1(const Part1Problem& problem, double target_fraction,
                           std::size_t trials, Seed seed) {
  require(target_fraction > 0.0 && target_fraction < 1.0,
          "calibrate_c1: target fraction must lie in (0, 1)");
  double best = 0.0;
  for (double c1 = kC1Start; c1 <= kC1Max; c1 *= kGridFactor) {
    const std::size_t m1 = part1_measurements(c1, problem.n, problem.k);
    const double fraction = mean_zero_fraction(problem, m1, trials, seed);
    if (fraction >= target_fraction) return {c1, m1, fraction};
    best = std::max(best, fraction);
  }
  throw CalibrationFailure("no c1 up to 64 identifies " + std::to_string(target_fraction) +
                               " of the zeros; best fraction " + std::to_string(best),
                           best);
}

C2Calibration calibrate_c2(const Part1Problem& problem, std::size_t m1, std::size_t trials,
                           Seed seed) {
  const double k = static_cast<double>(problem.k);
  C2Calibration best{0.0, -1.0};
  for (double c2 = kC2Start; c2 / k <= 1.0; c2 *= kGridFactor) {
    Part1Problem candidate = problem;
    candidate.p = c2 / k;
    const double fraction = mean_zero_fraction(candidate, m1, trials, seed);
    if (fraction > best.achieved_fraction) best = {c2, fraction};
  }
  return best;
}

}  // namespace twopart::bench
