#include "twopart/biht.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "twopart/error.hpp"

namespace twopart {

double BihtConfig::resolved_step(std::size_t measurements) const {
  if (step_size) return *step_size;
  return variant == BihtVariant::one_sided_l1 ? 1.0 : 1.0 / static_cast<double>(measurements);
}

void BihtConfig::validate() const {
  require(sparsity >= 1, "BIHT sparsity must be at least 1");
  require(max_iterations >= 1, "BIHT needs at least one iteration");
  require(!step_size || *step_size > 0.0, "BIHT step size must be positive");
}

void hard_threshold_in_place(std::span<double> a, std::size_t k) {
  const std::size_t n = a.size();
  if (k >= n) return;
  if (k == 0) {
    std::fill(a.begin(), a.end(), 0.0);
    return;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto before = [&](std::size_t i, std::size_t j) {
    const double ai = std::abs(a[i]);
    const double aj = std::abs(a[j]);
    return ai > aj || (ai == aj && i < j);
  };
  std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                   before);
  for (auto it = order.begin() + static_cast<std::ptrdiff_t>(k); it != order.end(); ++it) {
    a[*it] = 0.0;
  }
}

std::vector<double> hard_threshold(std::span<const double> a, std::size_t k) {
  std::vector<double> out(a.begin(), a.end());
  hard_threshold_in_place(out, k);
  return out;
}

namespace {

std::size_t count_mismatches(std::span<const double> u, const BitMeasurements& y) {
  std::size_t errors = 0;
  for (std::size_t j = 0; j < u.size(); ++j) errors += sign_bit(u[j]) != y[j];
  return errors;
}

void check_dimensions(std::size_t rows, const BitMeasurements& y) {
  require(y.alphabet() == Alphabet::sign, "BIHT needs sign measurements");
  require(y.size() == rows, "measurement count must equal matrix row count");
}

double sign_or_zero(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

template <typename Scalar>
BihtResult biht(const DenseMatrix<Scalar>& a, const BitMeasurements& y, const BihtConfig& config) {
  config.validate();
  check_dimensions(a.rows(), y);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const double tau = config.resolved_step(m);
  const auto exec = config.execution;
  const auto view = a.view();

  std::vector<double> x(n, 0.0);
  std::vector<double> u(m, 0.0);  // A x for the current iterate
  std::vector<double> r(m, 0.0);
  std::vector<double> g(n, 0.0);
  bool at_zero = true;

  BihtResult result;
  auto& trace = result.trace;
  trace.hamming_errors_per_iteration.reserve(config.max_iterations);

  for (std::size_t it = 0; it < config.max_iterations; ++it) {
    double coeff = 0.0;
    if (config.variant == BihtVariant::one_sided_l1 || at_zero) {
      for (std::size_t j = 0; j < m; ++j) r[j] = y[j] - sign_or_zero(u[j]);
      coeff = tau / 2.0;
    } else {
      for (std::size_t j = 0; j < m; ++j) {
        const double margin = y[j] * u[j];
        r[j] = margin < 0.0 ? y[j] * margin : 0.0;
      }
      coeff = -tau;
    }
    kernels::dense_apply_transposed(exec, view, r, g);
    for (std::size_t i = 0; i < n; ++i) x[i] += coeff * g[i];
    hard_threshold_in_place(x, config.sparsity);
    at_zero = std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });

    kernels::dense_apply(exec, view, x, u);
    const std::size_t errors = count_mismatches(u, y);
    trace.hamming_errors_per_iteration.push_back(errors);
    trace.iterations_run = it + 1;
    if (config.stop_on_consistency && errors == 0) break;
  }

  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& v : x) v /= norm;
    kernels::dense_apply(exec, view, x, u);
    trace.final_hamming_errors = count_mismatches(u, y);
    trace.consistent = trace.final_hamming_errors == 0;
  } else {
    trace.final_hamming_errors = count_mismatches(std::vector<double>(m, 0.0), y);
    trace.consistent = false;
  }
  result.xhat = std::move(x);
  return result;
}

template <typename Scalar>
Consistency consistency_check(const DenseMatrix<Scalar>& a, const BitMeasurements& y,
                              std::span<const double> xhat, Execution exec) {
  check_dimensions(a.rows(), y);
  require(xhat.size() == a.cols(), "estimate length must equal matrix column count");
  std::vector<double> u(a.rows());
  kernels::dense_apply(exec, a.view(), xhat, std::span<double>(u));
  Consistency c;
  c.hamming_errors = count_mismatches(u, y);
  c.consistent = c.hamming_errors == 0;
  return c;
}

template <typename Scalar>
double one_sided_l2_objective(const DenseMatrix<Scalar>& a, const BitMeasurements& y,
                              std::span<const double> x) {
  check_dimensions(a.rows(), y);
  require(x.size() == a.cols(), "vector length must equal matrix column count");
  std::vector<double> u(a.rows());
  kernels::serial::dense_apply(a.view(), x, std::span<double>(u));
  double j = 0.0;
  for (std::size_t r = 0; r < u.size(); ++r) {
    const double margin = std::min(y[r] * u[r], 0.0);
    j += 0.5 * margin * margin;
  }
  return j;
}

template BihtResult biht<double>(const DenseMatrix<double>&, const BitMeasurements&,
                                 const BihtConfig&);
template BihtResult biht<float>(const DenseMatrix<float>&, const BitMeasurements&,
                                const BihtConfig&);
template Consistency consistency_check<double>(const DenseMatrix<double>&, const BitMeasurements&,
                                               std::span<const double>, Execution);
template Consistency consistency_check<float>(const DenseMatrix<float>&, const BitMeasurements&,
                                              std::span<const double>, Execution);
template double one_sided_l2_objective<double>(const DenseMatrix<double>&, const BitMeasurements&,
                                               std::span<const double>);
template double one_sided_l2_objective<float>(const DenseMatrix<float>&, const BitMeasurements&,
                                              std::span<const double>);

}  // namespace twopart
