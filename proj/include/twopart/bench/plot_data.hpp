#pragma once

#include <cstddef>
#include <filesystem>
#include <string_view>
#include <vector>

#include "twopart/bench/sweep.hpp"

namespace twopart::bench {

enum class Metric { snr, runtime };

/// "snr" or "runtime"; anything else raises InvalidParameter.
Metric parse_metric(std::string_view name);

struct SeriesFile {
  Algorithm algorithm = Algorithm::two_part;
  std::size_t iters = 0;
  std::filesystem::path path;
  std::size_t points = 0;
};

/// Writes one whitespace-delimited file per (algorithm, iteration budget)
/// with columns `m_over_n mean stderr`, rows in ascending m_over_n, plus a
/// manifest `series_<metric>.manifest` naming every file. Infinite SNRs are
/// left out of the means; a point with no usable values prints `nan`.
std::vector<SeriesFile> emit_plot_data(const std::vector<SweepRow>& rows, Metric metric,
                                       const std::filesystem::path& out_dir);

}  // namespace twopart::bench
