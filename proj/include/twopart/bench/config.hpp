#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twopart/biht.hpp"
#include "twopart/error.hpp"
#include "twopart/pipeline.hpp"
#include "twopart/rng.hpp"

namespace twopart::bench {

/// Malformed or inconsistent experiment configuration.
class ConfigError : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

enum class Mode { noiseless, noisy };
enum class EpsilonRule { absolute, noise_std };

/// Noise variance used by the noisy experiments, 10^-2.5.
inline const double kDefaultNoisyVariance = 0.0031622776601683794;

struct SweepConfig {
  Mode mode = Mode::noisy;
  std::size_t n = 2000;
  std::size_t k = 10;
  std::vector<double> m_over_n_grid{0.5, 1.0, 1.5, 2.0};
  std::optional<double> c1;  ///< unset: calibrate
  std::optional<double> c2 = 1.0;  ///< unset: calibrate
  double calibration_target = 0.9;
  std::size_t calibration_trials = 20;
  EpsilonRule epsilon_rule = EpsilonRule::noise_std;
  double epsilon_value = 1.0;
  double noise_variance = kDefaultNoisyVariance;
  std::size_t zero_threshold = 3;
  std::vector<std::size_t> iteration_budgets{30, 80, 130};
  std::size_t trials_per_point = 10;
  Seed base_seed = 1;
  std::string output_path = "results.csv";
  std::optional<double> step_size;
  Precision precision = Precision::float64;
  std::size_t threads = 1;
  bool record_runtime = true;
  bool redraw_signal = true;

  double noise_std() const;
  double epsilon() const;
  BihtVariant variant() const {
    return mode == Mode::noiseless ? BihtVariant::one_sided_l1 : BihtVariant::one_sided_l2;
  }
  bool stop_on_consistency() const { return mode == Mode::noiseless; }
  void validate() const;
};

/// Parses a flat JSON object. Keys absent from the text take mode-dependent
/// defaults; unknown keys raise ConfigError.
SweepConfig parse_sweep_config(std::string_view text);
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// Canonical JSON rendering of the resolved config (used for hashing).
std::string to_canonical_json(const SweepConfig& config);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

std::string_view to_string(Mode mode);

inline constexpr std::string_view kLibraryVersion = "1.0.0";

}  // namespace twopart::bench
