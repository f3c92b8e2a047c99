#include "twopart/bench/plot_data.hpp"

#include <fstream>
#include <map>
#include <string>

#include "twopart/error.hpp"

namespace twopart::bench {

Metric parse_metric(std::string_view name) {
  if (name == "snr") return Metric::snr;
  if (name == "runtime") return Metric::runtime;
  throw InvalidParameter("unknown metric '" + std::string(name) + "' (expected snr or runtime)");
}

std::vector<SeriesFile> emit_plot_data(const std::vector<SweepRow>& rows, Metric metric,
                                       const std::filesystem::path& out_dir) {
  const auto summaries = summarize(rows);
  require(!summaries.empty(), "emit_plot_data: no completed runs in the results");
  std::filesystem::create_directories(out_dir);

  const std::string metric_name = metric == Metric::snr ? "snr" : "runtime";
  std::map<std::pair<int, std::size_t>, std::vector<const PointSummary*>> series;
  for (const auto& s : summaries) {
    series[{static_cast<int>(s.algorithm), s.iters}].push_back(&s);
  }

  std::vector<SeriesFile> files;
  std::ofstream manifest(out_dir / ("series_" + metric_name + ".manifest"));
  manifest << "# file algorithm iters metric points\n";
  for (const auto& [key, points] : series) {
    SeriesFile f;
    f.algorithm = static_cast<Algorithm>(key.first);
    f.iters = key.second;
    const std::string name = std::string(to_string(f.algorithm)) + "_iters" +
                             std::to_string(f.iters) + "_" + metric_name + ".dat";
    f.path = out_dir / name;
    f.points = points.size();

    std::ofstream out(f.path);
    out << "# algorithm=" << to_string(f.algorithm) << " iters=" << f.iters
        << " metric=" << metric_name << '\n';
    out << "# m_over_n mean stderr\n";
    // summarize() already orders each series by m_over_n.
    for (const auto* p : points) {
      const bool usable = metric == Metric::snr ? p->finite_snr_count > 0 : p->runtime_count > 0;
      const double mean = metric == Metric::snr ? p->mean_snr_db : p->mean_runtime_s;
      const double err = metric == Metric::snr ? p->stderr_snr_db : p->stderr_runtime_s;
      out << format_double(p->m_over_n) << ' ' << (usable ? format_double(mean) : "nan") << ' '
          << (usable ? format_double(err) : "nan") << '\n';
    }
    manifest << name << ' ' << to_string(f.algorithm) << ' ' << f.iters << ' ' << metric_name
             << ' ' << f.points << '\n';
    files.push_back(std::move(f));
  }
  return files;
}

}  // namespace twopart::bench
