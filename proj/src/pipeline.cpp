#include "twopart/pipeline.hpp"

#include <chrono>

#include "twopart/error.hpp"
#include "twopart/zero_ident.hpp"

namespace twopart {

void TwoPartConfig::validate() const {
  require(k >= 1 && k <= n, "two-part: need 1 <= k <= n");
  require(m2 >= 1, "two-part: m2 must be at least 1");
  require(p > 0.0 && p <= 1.0, "two-part: p must lie in (0, 1]");
  require(epsilon >= 0.0, "two-part: epsilon must be nonnegative");
  require(noise_variance >= 0.0, "two-part: noise variance must be nonnegative");
  require(epsilon > 0.0 || noise_variance == 0.0,
          "two-part: epsilon = 0 is only meaningful without noise");
  require(zero_threshold >= 1, "two-part: zero threshold must be at least 1");
  biht.validate();
}

void DirectConfig::validate() const {
  require(k >= 1 && k <= n, "direct: need 1 <= k <= n");
  require(m >= 1, "direct: m must be at least 1");
  require(noise_variance >= 0.0, "direct: noise variance must be nonnegative");
  biht.validate();
}

template <typename Scalar>
DenseMatrix<Scalar> reduce_columns(const DenseMatrix<Scalar>& a, const IndexSet& t,
                                   Execution exec) {
  if (t.empty()) throw EmptyResidual();
  require(t.within(a.cols()), "reduce_columns: column index out of range");
  std::vector<Scalar> entries(a.rows() * t.size());
  kernels::gather_columns(exec, a.view(), t.view(), std::span<Scalar>(entries));
  return DenseMatrix<Scalar>(a.rows(), t.size(), std::move(entries), a.seed());
}

std::vector<double> embed_solution(std::span<const double> xhat2, const IndexSet& t,
                                   std::size_t n) {
  require(xhat2.size() == t.size(), "embed_solution: estimate and index set sizes differ");
  require(t.within(n), "embed_solution: index out of range");
  std::vector<double> out(n, 0.0);
  for (std::size_t c = 0; c < t.size(); ++c) out[t[c]] = xhat2[c];
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Scalar>
RunResult two_part_impl(const TwoPartConfig& cfg) {
  const auto signal = generate_signal(cfg.n, cfg.k, cfg.seeds.signal);
  const auto x = signal.values();
  const Execution exec = cfg.biht.execution;

  const auto phi1 = gen_bernoulli_matrix(cfg.m1, cfg.n, cfg.p, cfg.seeds.matrix1);
  const auto y1 = quantize_magnitude(measure(phi1, x, cfg.noise_variance, cfg.seeds.noise1, exec),
                                     cfg.epsilon);
  const auto phi2 = gen_gaussian_matrix<Scalar>(cfg.m2, cfg.n, cfg.seeds.matrix2);
  const auto y2 = quantize_sign(measure(phi2, x, cfg.noise_variance, cfg.seeds.noise2, exec));

  RunResult out;
  auto& report = out.report;
  const auto start = Clock::now();

  const auto part1 = identify_zeros(phi1, small_measurement_set(y1), cfg.zero_threshold, exec);
  if (part1.residual_set.empty()) {
    out.xhat.assign(cfg.n, 0.0);
    report.empty_residual = true;
  } else {
    const auto reduced = reduce_columns(phi2, part1.residual_set, exec);
    auto solved = biht(reduced, y2, cfg.biht);
    out.xhat = embed_solution(solved.xhat, part1.residual_set, cfg.n);
    report.iterations_used = solved.trace.iterations_run;
    report.consistent = solved.trace.consistent;
  }
  report.runtime_seconds = seconds_since(start);

  const auto support = support_metrics(x, part1.zero_set);
  report.part1_zero_identified = support.zero_identified;
  report.part1_false_zeros = support.false_zeros;
  report.residual_problem_size = part1.residual_set.size();
  report.part1_zero_fraction =
      cfg.n > cfg.k ? static_cast<double>(support.zero_identified - support.false_zeros) /
                          static_cast<double>(cfg.n - cfg.k)
                    : 1.0;
  report.snr_db = snr_db(x, out.xhat);
  return out;
}

template <typename Scalar>
RunResult direct_impl(const DirectConfig& cfg) {
  const auto signal = generate_signal(cfg.n, cfg.k, cfg.seeds.signal);
  const auto x = signal.values();
  const auto phi = gen_gaussian_matrix<Scalar>(cfg.m, cfg.n, cfg.seeds.matrix);
  const auto y = quantize_sign(measure(phi, x, cfg.noise_variance, cfg.seeds.noise,
                                       cfg.biht.execution));

  RunResult out;
  const auto start = Clock::now();
  auto solved = biht(phi, y, cfg.biht);
  out.report.runtime_seconds = seconds_since(start);

  out.xhat = std::move(solved.xhat);
  out.report.iterations_used = solved.trace.iterations_run;
  out.report.consistent = solved.trace.consistent;
  out.report.residual_problem_size = cfg.n;
  out.report.snr_db = snr_db(x, out.xhat);
  return out;
}

}  // namespace

RunResult run_two_part(const TwoPartConfig& config) {
  config.validate();
  return config.precision == Precision::float32 ? two_part_impl<float>(config)
                                                : two_part_impl<double>(config);
}

RunResult run_direct(const DirectConfig& config) {
  config.validate();
  return config.precision == Precision::float32 ? direct_impl<float>(config)
                                                : direct_impl<double>(config);
}

template DenseMatrix<double> reduce_columns<double>(const DenseMatrix<double>&, const IndexSet&,
                                                    Execution);
template DenseMatrix<float> reduce_columns<float>(const DenseMatrix<float>&, const IndexSet&,
                                                  Execution);

}  // namespace twopart
