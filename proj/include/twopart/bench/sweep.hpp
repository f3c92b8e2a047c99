#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "twopart/bench/config.hpp"
#include "twopart/pipeline.hpp"

namespace twopart::bench {

inline constexpr std::string_view kCsvHeader =
    "mode,algorithm,m_over_n,m,m1,m2,iters,trial,seed,snr_db,runtime_s,part1_zero_frac,"
    "part1_false_zeros,residual_size,consistent,status";

enum class Algorithm { two_part, direct };
std::string_view to_string(Algorithm a);

/// One CSV line. Numeric fields of infeasible rows are meaningless and are
/// written empty.
struct SweepRow {
  Mode mode = Mode::noisy;
  Algorithm algorithm = Algorithm::two_part;
  double m_over_n = 0.0;
  std::size_t m = 0;
  std::size_t m1 = 0;
  long long m2 = 0;
  std::size_t iters = 0;
  std::size_t trial = 0;
  Seed seed = 0;
  double snr_db = 0.0;
  double runtime_s = 0.0;
  bool runtime_recorded = true;
  double part1_zero_frac = 0.0;
  std::size_t part1_false_zeros = 0;
  std::size_t residual_size = 0;
  bool consistent = false;
  std::string status = "ok";
};

std::string format_csv_row(const SweepRow& row);
std::string format_double(double v);

/// Seeds for trial t at grid index g; pure function of (base_seed, g, t).
struct TrialSeeds {
  Seed trial = 0;
  TwoPartSeeds two_part;
  DirectSeeds direct;
};
TrialSeeds derive_trial_seeds(const SweepConfig& config, std::size_t grid_index,
                              std::size_t trial);

/// Constants fixed for a whole sweep (after calibration).
struct ResolvedParameters {
  double c1 = 0.0;
  double c2 = 0.0;
  double p = 0.0;
  double epsilon = 0.0;
  std::size_t m1 = 0;
};
ResolvedParameters resolve_parameters(const SweepConfig& config);

struct GridPoint {
  double m_over_n = 0.0;
  std::size_t m = 0;
  std::size_t m1 = 0;
  long long m2 = 0;
  bool feasible() const { return m2 > 0; }
};
GridPoint grid_point(const SweepConfig& config, const ResolvedParameters& params, double m_over_n);

TwoPartConfig two_part_config(const SweepConfig& config, const ResolvedParameters& params,
                              const GridPoint& point, std::size_t iters, const TrialSeeds& seeds);
DirectConfig direct_config(const SweepConfig& config, const GridPoint& point, std::size_t iters,
                           const TrialSeeds& seeds);

struct SweepResults {
  ResolvedParameters params;
  std::vector<SweepRow> rows;
  std::size_t feasible_points = 0;
};

/// Runs every (grid point, budget, trial) cell, paired two-part and direct,
/// and streams rows to `csv` one grid point at a time in deterministic order.
SweepResults run_sweep(const SweepConfig& config, std::ostream& csv);

/// run_sweep writing config.output_path plus "<output>.manifest.json" and
/// "<output>.summary.csv".
SweepResults run_sweep_to_files(const SweepConfig& config);

/// Parses a CSV produced by run_sweep.
std::vector<SweepRow> read_results_csv(std::istream& in);

/// Per (algorithm, iters, m_over_n) aggregate over ok/empty_residual rows.
struct PointSummary {
  Algorithm algorithm = Algorithm::two_part;
  std::size_t iters = 0;
  double m_over_n = 0.0;
  std::size_t trials = 0;
  std::size_t finite_snr_count = 0;
  std::size_t exact_recoveries = 0;
  double mean_snr_db = 0.0;
  double stderr_snr_db = 0.0;
  std::size_t runtime_count = 0;
  double mean_runtime_s = 0.0;
  double stderr_runtime_s = 0.0;
  double mean_part1_zero_frac = 0.0;
  double mean_part1_false_zeros = 0.0;
};

/// Sorted by algorithm, iters, then m_over_n.
std::vector<PointSummary> summarize(const std::vector<SweepRow>& rows);

}  // namespace twopart::bench
