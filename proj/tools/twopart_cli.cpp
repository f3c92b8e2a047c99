// twopart: experiment harness for two-part 1-bit reconstruction.
//
//   twopart calibrate --config cfg.json
//   twopart sweep     --config cfg.json
//   twopart single    --config cfg.json [--m-over-n R] [--iters I] [--trial T]
//   twopart plot-data --csv results.csv --metric snr|runtime --out DIR
//
// Exit codes: 0 success, 2 invalid config, 3 calibration failure,
// 4 sweep with no feasible point.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "twopart/bench/calibrate.hpp"
#include "twopart/bench/config.hpp"
#include "twopart/bench/plot_data.hpp"
#include "twopart/bench/sweep.hpp"

namespace {

namespace tb = twopart::bench;

constexpr int kExitInvalidConfig = 2;
constexpr int kExitCalibrationFailure = 3;
constexpr int kExitInfeasible = 4;

void warn_memory(const tb::SweepConfig& c) {
  double max_ratio = 0.0;
  for (double r : c.m_over_n_grid) max_ratio = std::max(max_ratio, r);
  const double bytes_per = c.precision == twopart::Precision::float32 ? 4.0 : 8.0;
  const double bytes = max_ratio * static_cast<double>(c.n) * static_cast<double>(c.n) * bytes_per;
  if (bytes > 1e9) {
    std::fprintf(stderr,
                 "warning: the largest dense matrix needs about %.1f GB; "
                 "\"precision\": \"float32\" halves this\n",
                 bytes / 1e9);
  }
}

void print_report(const char* label, const twopart::ReconstructionReport& r) {
  std::printf("%s\n", label);
  std::printf("  snr_db                 %s\n", tb::format_double(r.snr_db).c_str());
  std::printf("  runtime_seconds        %.6f\n", r.runtime_seconds);
  std::printf("  part1_zero_identified  %zu\n", r.part1_zero_identified);
  std::printf("  part1_false_zeros      %zu\n", r.part1_false_zeros);
  std::printf("  part1_zero_fraction    %.6f\n", r.part1_zero_fraction);
  std::printf("  residual_problem_size  %zu\n", r.residual_problem_size);
  std::printf("  iterations_used        %zu\n", r.iterations_used);
  std::printf("  consistent             %s\n", r.consistent ? "yes" : "no");
  if (r.empty_residual) std::printf("  (Part 1 resolved every coefficient; Part 2 skipped)\n");
}

int cmd_calibrate(const tb::SweepConfig& config) {
  const auto params = tb::resolve_parameters(config);
  std::printf("c1 %s\nc2 %s\np %s\nepsilon %s\nm1 %zu\n", tb::format_double(params.c1).c_str(),
              tb::format_double(params.c2).c_str(), tb::format_double(params.p).c_str(),
              tb::format_double(params.epsilon).c_str(), params.m1);
  return 0;
}

int cmd_sweep(const tb::SweepConfig& config) {
  warn_memory(config);
  const auto results = tb::run_sweep_to_files(config);
  std::printf("wrote %zu rows to %s (c1 %s, m1 %zu)\n", results.rows.size(),
              config.output_path.c_str(), tb::format_double(results.params.c1).c_str(),
              results.params.m1);
  if (results.feasible_points == 0) {
    std::fprintf(stderr, "error: every grid point is infeasible (m2 <= 0)\n");
    return kExitInfeasible;
  }
  return 0;
}

int cmd_single(const tb::SweepConfig& config, double m_over_n, std::size_t iters,
               std::size_t trial) {
  const auto params = tb::resolve_parameters(config);
  const auto point = tb::grid_point(config, params, m_over_n);
  std::printf("n %zu k %zu m %zu m1 %zu m2 %lld iters %zu trial %zu\n", config.n, config.k,
              point.m, point.m1, point.m2, iters, trial);
  if (!point.feasible()) {
    std::fprintf(stderr, "error: m2 = m - m1 <= 0 at this measurement rate\n");
    return kExitInfeasible;
  }
  const auto seeds = tb::derive_trial_seeds(config, 0, trial);
  const auto two = twopart::run_two_part(tb::two_part_config(config, params, point, iters, seeds));
  const auto dir = twopart::run_direct(tb::direct_config(config, point, iters, seeds));
  print_report("two_part", two.report);
  print_report("direct", dir.report);
  return 0;
}

int cmd_plot_data(const std::string& csv_path, const std::string& metric_name,
                  const std::string& out_dir) {
  const auto metric = tb::parse_metric(metric_name);
  std::ifstream in(csv_path);
  if (!in) throw twopart::InvalidParameter("cannot open " + csv_path);
  const auto rows = tb::read_results_csv(in);
  const auto files = tb::emit_plot_data(rows, metric, out_dir);
  for (const auto& f : files) std::printf("%s\n", f.path.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-part 1-bit compressed sensing reconstruction harness"};
  app.require_subcommand(1);

  std::string config_path;
  auto* calibrate = app.add_subcommand("calibrate", "Calibrate c1 (and c2 when requested)");
  calibrate->add_option("-c,--config", config_path, "JSON config file")->required();

  auto* sweep = app.add_subcommand("sweep", "Run a measurement-rate sweep and write CSV");
  sweep->add_option("-c,--config", config_path, "JSON config file")->required();

  double m_over_n = 1.0;
  std::size_t iters = 0;
  std::size_t trial = 0;
  auto* single = app.add_subcommand("single", "Run one paired two-part/direct reconstruction");
  single->add_option("-c,--config", config_path, "JSON config file")->required();
  auto* ratio_opt = single->add_option("--m-over-n", m_over_n, "Measurement rate M/N");
  single->add_option("--iters", iters, "BIHT iteration budget (default: first budget)");
  single->add_option("--trial", trial, "Trial index used for seed derivation");

  std::string csv_path;
  std::string metric = "snr";
  std::string out_dir = "plot-data";
  auto* plot = app.add_subcommand("plot-data", "Emit per-series plot data from a results CSV");
  plot->add_option("--csv", csv_path, "Results CSV from sweep")->required();
  plot->add_option("--metric", metric, "snr or runtime");
  plot->add_option("--out", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidConfig;
  }

  try {
    if (*plot) return cmd_plot_data(csv_path, metric, out_dir);
    const auto config = tb::load_sweep_config(config_path);
    if (*calibrate) return cmd_calibrate(config);
    if (*sweep) return cmd_sweep(config);
    if (!*ratio_opt) m_over_n = config.m_over_n_grid.front();
    if (iters == 0) iters = config.iteration_budgets.front();
    return cmd_single(config, m_over_n, iters, trial);
  } catch (const twopart::CalibrationFailure& e) {
    std::fprintf(stderr, "calibration failed: %s\n", e.what());
    return kExitCalibrationFailure;
  } catch (const twopart::InvalidParameter& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
