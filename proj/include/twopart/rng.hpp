#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace twopart {

using Seed = std::uint64_t;

/// Portable random stream.
///
/// Bits come from std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The std:: distributions are implementation-defined, so uniform,
/// integer and normal variates are derived here with fixed formulas:
///   uniform01: top 53 bits scaled by 2^-53, in [0, 1)
///   index(b):  rejection sampling on the top bits, unbiased in [0, b)
///   normal:    Marsaglia polar method, second variate cached
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform01();
  std::size_t index(std::size_t bound);
  double normal();

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

/// SplitMix64 finalizer; used to derive independent child seeds.
std::uint64_t mix64(std::uint64_t value);

/// Child seed as a pure function of a parent seed and a path of labels.
Seed derive_seed(Seed parent, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace twopart
