#include "twopart/bench/sweep.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "twopart/bench/calibrate.hpp"

namespace twopart::bench {

namespace {

constexpr std::uint64_t kSignalLabel = 1;
constexpr std::uint64_t kMatrix1Label = 2;
constexpr std::uint64_t kMatrix2Label = 3;
constexpr std::uint64_t kNoise1Label = 4;
constexpr std::uint64_t kNoise2Label = 5;
constexpr std::uint64_t kFixedSignalLabel = 0x51c0;
constexpr std::uint64_t kCalibrationLabel = 0xCA11B;
// c1 used to size Part 1 while searching for c2 when c1 is itself calibrated.
constexpr double kReferenceC1 = 2.0;

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidParameter("results CSV: bad number '" + s + "'");
  }
  return v;
}

template <typename Int>
Int parse_int(const std::string& s) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidParameter("results CSV: bad integer '" + s + "'");
  }
  return v;
}

SweepRow infeasible_row(const SweepConfig& config, const GridPoint& point, Algorithm algorithm,
                        std::size_t iters) {
  SweepRow row;
  row.mode = config.mode;
  row.algorithm = algorithm;
  row.m_over_n = point.m_over_n;
  row.m = point.m;
  row.m1 = point.m1;
  row.m2 = point.m2;
  row.iters = iters;
  row.status = "infeasible";
  return row;
}

SweepRow result_row(const SweepConfig& config, const GridPoint& point, Algorithm algorithm,
                    std::size_t iters, std::size_t trial, Seed seed,
                    const ReconstructionReport& report) {
  SweepRow row;
  row.mode = config.mode;
  row.algorithm = algorithm;
  row.m_over_n = point.m_over_n;
  row.m = point.m;
  row.m1 = point.m1;
  row.m2 = point.m2;
  row.iters = iters;
  row.trial = trial;
  row.seed = seed;
  row.snr_db = report.snr_db;
  row.runtime_s = report.runtime_seconds;
  row.runtime_recorded = config.record_runtime;
  row.part1_zero_frac = algorithm == Algorithm::two_part ? report.part1_zero_fraction : 0.0;
  row.part1_false_zeros = report.part1_false_zeros;
  row.residual_size = report.residual_problem_size;
  row.consistent = report.consistent;
  row.status = report.empty_residual ? "empty_residual" : "ok";
  return row;
}

void write_manifest(const SweepConfig& config, const SweepResults& results,
                    const std::filesystem::path& path) {
  using nlohmann::json;
  const std::string canonical = to_canonical_json(config);
  json j;
  j["library_version"] = std::string(kLibraryVersion);
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical)));
  j["config_hash_fnv1a64"] = hash;
  j["config"] = json::parse(canonical);
  j["resolved"] = {{"c1", results.params.c1},
                   {"c2", results.params.c2},
                   {"p", results.params.p},
                   {"epsilon", results.params.epsilon},
                   {"m1", results.params.m1}};
  json seeds = json::array();
  for (std::size_t g = 0; g < config.m_over_n_grid.size(); ++g) {
    for (std::size_t t = 0; t < config.trials_per_point; ++t) {
      const auto s = derive_trial_seeds(config, g, t);
      seeds.push_back({{"grid_index", g},
                       {"trial", t},
                       {"trial_seed", s.trial},
                       {"signal", s.two_part.signal},
                       {"matrix1", s.two_part.matrix1},
                       {"matrix2", s.two_part.matrix2},
                       {"noise1", s.two_part.noise1},
                       {"noise2", s.two_part.noise2}});
    }
  }
  j["derived_seeds"] = std::move(seeds);
  std::ofstream out(path);
  out << j.dump(2) << '\n';
}

void write_summary(const std::vector<SweepRow>& rows, Mode mode, const std::filesystem::path& path) {
  std::ofstream out(path);
  out << "mode,algorithm,m_over_n,iters,trials,mean_snr_db,stderr_snr_db,exact_recoveries,"
         "mean_runtime_s,stderr_runtime_s,mean_part1_zero_frac,mean_part1_false_zeros\n";
  for (const auto& s : summarize(rows)) {
    out << to_string(mode) << ',' << to_string(s.algorithm) << ',' << format_double(s.m_over_n)
        << ',' << s.iters << ',' << s.trials << ','
        << (s.finite_snr_count ? format_double(s.mean_snr_db) : "nan") << ','
        << format_double(s.stderr_snr_db) << ',' << s.exact_recoveries << ','
        << (s.runtime_count ? format_double(s.mean_runtime_s) : "na") << ','
        << (s.runtime_count ? format_double(s.stderr_runtime_s) : "na") << ','
        << format_double(s.mean_part1_zero_frac) << ','
        << format_double(s.mean_part1_false_zeros) << '\n';
  }
}

}  // namespace

std::string_view to_string(Algorithm a) { return a == Algorithm::two_part ? "two_part" : "direct"; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_csv_row(const SweepRow& r) {
  std::ostringstream out;
  out << to_string(r.mode) << ',' << to_string(r.algorithm) << ',' << format_double(r.m_over_n)
      << ',' << r.m << ',' << r.m1 << ',' << r.m2 << ',' << r.iters << ',';
  if (r.status == "infeasible") {
    out << ",,,,,,,," << r.status;
    return out.str();
  }
  out << r.trial << ',' << r.seed << ',' << format_double(r.snr_db) << ','
      << (r.runtime_recorded ? format_double(r.runtime_s) : "na") << ','
      << format_double(r.part1_zero_frac) << ',' << r.part1_false_zeros << ','
      << r.residual_size << ',' << (r.consistent ? 1 : 0) << ',' << r.status;
  return out.str();
}

TrialSeeds derive_trial_seeds(const SweepConfig& config, std::size_t grid_index,
                              std::size_t trial) {
  TrialSeeds s;
  s.trial = derive_seed(config.base_seed, grid_index, trial);
  s.two_part.signal = config.redraw_signal ? derive_seed(s.trial, kSignalLabel)
                                           : derive_seed(config.base_seed, kFixedSignalLabel);
  s.two_part.matrix1 = derive_seed(s.trial, kMatrix1Label);
  s.two_part.matrix2 = derive_seed(s.trial, kMatrix2Label);
  s.two_part.noise1 = derive_seed(s.trial, kNoise1Label);
  s.two_part.noise2 = derive_seed(s.trial, kNoise2Label);
  // The direct baseline shares the signal, and its Gaussian matrix and noise
  // streams extend those of Part 2.
  s.direct.signal = s.two_part.signal;
  s.direct.matrix = s.two_part.matrix2;
  s.direct.noise = s.two_part.noise2;
  return s;
}

ResolvedParameters resolve_parameters(const SweepConfig& config) {
  config.validate();
  ResolvedParameters params;
  params.epsilon = config.epsilon();
  const Seed calibration_seed = derive_seed(config.base_seed, kCalibrationLabel);
  Part1Problem problem{config.n, config.k, 1.0, params.epsilon, config.noise_variance,
                       config.zero_threshold};
  if (config.c2) {
    params.c2 = *config.c2;
  } else {
    const double c1_for_search = config.c1.value_or(kReferenceC1);
    params.c2 = calibrate_c2(problem, part1_measurements(c1_for_search, config.n, config.k),
                             config.calibration_trials, calibration_seed)
                    .c2;
  }
  params.p = params.c2 / static_cast<double>(config.k);
  problem.p = params.p;
  if (config.c1) {
    params.c1 = *config.c1;
  } else {
    params.c1 = calibrate_c1(problem, config.calibration_target, config.calibration_trials,
                             calibration_seed)
                    .c1;
  }
  params.m1 = part1_measurements(params.c1, config.n, config.k);
  return params;
}

GridPoint grid_point(const SweepConfig& config, const ResolvedParameters& params,
                     double m_over_n) {
  GridPoint g;
  g.m_over_n = m_over_n;
  g.m = static_cast<std::size_t>(std::llround(static_cast<double>(config.n) * m_over_n));
  g.m1 = params.m1;
  g.m2 = static_cast<long long>(g.m) - static_cast<long long>(g.m1);
  return g;
}

namespace {

BihtConfig solver_config(const SweepConfig& config, std::size_t iters) {
  BihtConfig b;
  b.sparsity = config.k;
  b.step_size = config.step_size;
  b.max_iterations = iters;
  b.variant = config.variant();
  b.stop_on_consistency = config.stop_on_consistency();
  b.execution = Execution::serial;
  return b;
}

}  // namespace

TwoPartConfig two_part_config(const SweepConfig& config, const ResolvedParameters& params,
                              const GridPoint& point, std::size_t iters, const TrialSeeds& seeds) {
  TwoPartConfig c;
  c.n = config.n;
  c.k = config.k;
  c.m1 = point.m1;
  c.m2 = static_cast<std::size_t>(point.m2);
  c.p = params.p;
  c.epsilon = params.epsilon;
  c.zero_threshold = config.zero_threshold;
  c.noise_variance = config.noise_variance;
  c.biht = solver_config(config, iters);
  c.seeds = seeds.two_part;
  c.precision = config.precision;
  return c;
}

DirectConfig direct_config(const SweepConfig& config, const GridPoint& point, std::size_t iters,
                           const TrialSeeds& seeds) {
  DirectConfig c;
  c.n = config.n;
  c.k = config.k;
  c.m = point.m;
  c.noise_variance = config.noise_variance;
  c.biht = solver_config(config, iters);
  c.seeds = seeds.direct;
  c.precision = config.precision;
  return c;
}

SweepResults run_sweep(const SweepConfig& config, std::ostream& csv) {
  SweepResults results;
  results.params = resolve_parameters(config);
  csv << kCsvHeader << '\n';

  const std::size_t budgets = config.iteration_budgets.size();
  const std::size_t trials = config.trials_per_point;
  for (std::size_t g = 0; g < config.m_over_n_grid.size(); ++g) {
    const auto point = grid_point(config, results.params, config.m_over_n_grid[g]);
    std::vector<SweepRow> rows;
    if (!point.feasible()) {
      for (auto iters : config.iteration_budgets) {
        rows.push_back(infeasible_row(config, point, Algorithm::two_part, iters));
        rows.push_back(infeasible_row(config, point, Algorithm::direct, iters));
      }
    } else {
      ++results.feasible_points;
      const auto cells = static_cast<std::ptrdiff_t>(budgets * trials);
      rows.resize(2 * budgets * trials);
      std::exception_ptr failure;
      [[maybe_unused]] const int nthreads = static_cast<int>(config.threads);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (nthreads > 1)
      for (std::ptrdiff_t cell = 0; cell < cells; ++cell) {
        const auto b = static_cast<std::size_t>(cell) / trials;
        const auto t = static_cast<std::size_t>(cell) % trials;
        const auto iters = config.iteration_budgets[b];
        try {
          const auto seeds = derive_trial_seeds(config, g, t);
          const auto two =
              run_two_part(two_part_config(config, results.params, point, iters, seeds));
          const auto dir = run_direct(direct_config(config, point, iters, seeds));
          rows[2 * static_cast<std::size_t>(cell)] =
              result_row(config, point, Algorithm::two_part, iters, t, seeds.trial, two.report);
          rows[2 * static_cast<std::size_t>(cell) + 1] =
              result_row(config, point, Algorithm::direct, iters, t, seeds.trial, dir.report);
        } catch (...) {
#pragma omp critical(twopart_sweep_failure)
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
    }
    for (const auto& row : rows) csv << format_csv_row(row) << '\n';
    csv.flush();
    results.rows.insert(results.rows.end(), rows.begin(), rows.end());
  }
  return results;
}

SweepResults run_sweep_to_files(const SweepConfig& config) {
  const std::filesystem::path out_path(config.output_path);
  if (out_path.has_parent_path()) std::filesystem::create_directories(out_path.parent_path());
  std::ofstream csv(out_path, std::ios::binary);
  if (!csv) throw InvalidParameter("cannot open output file " + out_path.string());
  auto results = run_sweep(config, csv);
  write_manifest(config, results, out_path.string() + ".manifest.json");
  write_summary(results.rows, config.mode, out_path.string() + ".summary.csv");
  return results;
}

std::vector<SweepRow> read_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw InvalidParameter("results CSV: missing or unexpected header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 16) throw InvalidParameter("results CSV: expected 16 fields: " + line);
    SweepRow r;
    if (f[0] == "noiseless") {
      r.mode = Mode::noiseless;
    } else if (f[0] == "noisy") {
      r.mode = Mode::noisy;
    } else {
      throw InvalidParameter("results CSV: bad mode '" + f[0] + "'");
    }
    if (f[1] == "two_part") {
      r.algorithm = Algorithm::two_part;
    } else if (f[1] == "direct") {
      r.algorithm = Algorithm::direct;
    } else {
      throw InvalidParameter("results CSV: bad algorithm '" + f[1] + "'");
    }
    r.m_over_n = parse_double(f[2]);
    r.m = parse_int<std::size_t>(f[3]);
    r.m1 = parse_int<std::size_t>(f[4]);
    r.m2 = parse_int<long long>(f[5]);
    r.iters = parse_int<std::size_t>(f[6]);
    r.status = f[15];
    if (r.status != "infeasible") {
      r.trial = parse_int<std::size_t>(f[7]);
      r.seed = parse_int<Seed>(f[8]);
      r.snr_db = parse_double(f[9]);
      r.runtime_recorded = f[10] != "na";
      r.runtime_s = r.runtime_recorded ? parse_double(f[10]) : 0.0;
      r.part1_zero_frac = parse_double(f[11]);
      r.part1_false_zeros = parse_int<std::size_t>(f[12]);
      r.residual_size = parse_int<std::size_t>(f[13]);
      r.consistent = f[14] == "1";
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<PointSummary> summarize(const std::vector<SweepRow>& rows) {
  using Key = std::tuple<int, std::size_t, double>;
  std::map<Key, std::vector<const SweepRow*>> groups;
  for (const auto& r : rows) {
    if (r.status == "infeasible") continue;
    groups[{static_cast<int>(r.algorithm), r.iters, r.m_over_n}].push_back(&r);
  }

  const auto mean_stderr = [](const std::vector<double>& v) {
    if (v.empty()) return std::pair{0.0, 0.0};
    double sum = 0.0;
    for (double e : v) sum += e;
    const double mean = sum / static_cast<double>(v.size());
    if (v.size() < 2) return std::pair{mean, 0.0};
    double ss = 0.0;
    for (double e : v) ss += (e - mean) * (e - mean);
    const double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
    return std::pair{mean, sd / std::sqrt(static_cast<double>(v.size()))};
  };

  std::vector<PointSummary> out;
  for (const auto& [key, members] : groups) {
    PointSummary s;
    s.algorithm = static_cast<Algorithm>(std::get<0>(key));
    s.iters = std::get<1>(key);
    s.m_over_n = std::get<2>(key);
    s.trials = members.size();
    std::vector<double> snr;
    std::vector<double> runtime;
    double zero_frac = 0.0;
    double false_zeros = 0.0;
    for (const auto* r : members) {
      if (std::isinf(r->snr_db) && r->snr_db > 0) {
        ++s.exact_recoveries;
      } else {
        snr.push_back(r->snr_db);
      }
      if (r->runtime_recorded) runtime.push_back(r->runtime_s);
      zero_frac += r->part1_zero_frac;
      false_zeros += static_cast<double>(r->part1_false_zeros);
    }
    s.finite_snr_count = snr.size();
    std::tie(s.mean_snr_db, s.stderr_snr_db) = mean_stderr(snr);
    s.runtime_count = runtime.size();
    std::tie(s.mean_runtime_s, s.stderr_runtime_s) = mean_stderr(runtime);
    s.mean_part1_zero_frac = zero_frac / static_cast<double>(s.trials);
    s.mean_part1_false_zeros = false_zeros / static_cast<double>(s.trials);
    out.push_back(s);
  }
  return out;
}

}  // namespace twopart::bench
