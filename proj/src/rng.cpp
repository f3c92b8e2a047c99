#include "twopart/rng.hpp"

#include <bit>
#include <cmath>

namespace twopart {

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::index(std::size_t bound) {
  if (bound <= 1) return 0;
  const auto b = static_cast<std::uint64_t>(bound);
  const int shift = std::countl_zero(b - 1);
  for (;;) {
    const std::uint64_t candidate = shift == 64 ? 0 : engine_() >> shift;
    if (candidate < b) return static_cast<std::size_t>(candidate);
  }
}

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_normal_;
  }
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  cached_normal_ = v * factor;
  has_cached_ = true;
  return u * factor;
}

std::uint64_t mix64(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

Seed derive_seed(Seed parent, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = mix64(parent);
  h = mix64(h ^ a);
  h = mix64(h ^ (b + 0x632be59bd9b4e019ULL));
  h = mix64(h ^ (c + 0x8cb92ba72f3d8dd7ULL));
  return h;
}

}  // namespace twopart
