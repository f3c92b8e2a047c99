#include "twopart/model.hpp"

#include <cmath>
#include <algorithm>
#include <numeric>

#include "twopart/error.hpp"

namespace twopart {

namespace {

double squared_norm(std::span<const double> v) {
  double acc = 0.0;
  for (double e : v) acc += e * e;
  return acc;
}

}  // namespace

SparseSignal SparseSignal::from_values(std::vector<double> values) {
  std::vector<Index> support;
  for (Index i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) support.push_back(i);
  }
  require(!support.empty(), "signal must have at least one nonzero");
  require(std::abs(std::sqrt(squared_norm(values)) - 1.0) <= 1e-12,
          "signal must have unit norm");
  SparseSignal out;
  out.values_ = std::move(values);
  out.support_ = IndexSet(std::move(support));
  return out;
}

SparseSignal generate_signal(std::size_t n, std::size_t k, Seed seed) {
  require(k >= 1 && k <= n, "generate_signal: need 1 <= k <= n");
  Rng rng(seed);

  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t j = t + rng.index(n - t);
    std::swap(perm[t], perm[j]);
  }

  SparseSignal out;
  out.values_.assign(n, 0.0);
  for (std::size_t t = 0; t < k; ++t) {
    double amp = rng.normal();
    // A zero amplitude has probability 0 but would break the k-nonzero invariant.
    while (amp == 0.0) amp = rng.normal();
    out.values_[perm[t]] = amp;
  }
  const double norm = std::sqrt(squared_norm(out.values_));
  for (double& v : out.values_) v /= norm;

  std::vector<Index> support(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(support.begin(), support.end());
  out.support_ = IndexSet(std::move(support));
  return out;
}

double snr_db(std::span<const double> x, std::span<const double> xhat) {
  require(x.size() == xhat.size(), "snr_db: length mismatch");
  double signal = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    signal += x[i] * x[i];
    const double d = x[i] - xhat[i];
    error += d * d;
  }
  require(signal > 0.0, "snr_db: reference signal is all zero");
  if (error == 0.0) return kExactRecovery;
  return 10.0 * std::log10(signal / error);
}

SupportMetrics support_metrics(std::span<const double> x, const IndexSet& zero_set) {
  require(zero_set.within(x.size()), "support_metrics: index out of range");
  SupportMetrics m;
  m.zero_identified = zero_set.size();
  for (Index i : zero_set) {
    if (x[i] != 0.0) ++m.false_zeros;
  }
  return m;
}

}  // namespace twopart
