#include "twopart/zero_ident.hpp"

#include "twopart/error.hpp"

namespace twopart {

IndexSet small_measurement_set(const BitMeasurements& bits) {
  require(bits.alphabet() == Alphabet::magnitude,
          "small_measurement_set needs magnitude bits");
  std::vector<Index> s;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == 0) s.push_back(j);
  }
  return IndexSet(std::move(s));
}

Part1Result identify_zeros(kernels::CompressedLists col_supports, std::size_t measurement_count,
                           const IndexSet& s_set, std::size_t threshold, Execution exec) {
  require(threshold >= 1, "zero threshold must be at least 1");
  require(s_set.within(measurement_count), "small-measurement index out of range");
  for (Index j : col_supports.indices) {
    require(j < measurement_count, "column support index out of range");
  }

  std::vector<std::uint8_t> mask(measurement_count, 0);
  for (Index j : s_set) mask[j] = 1;

  const std::size_t n = col_supports.count();
  std::vector<std::size_t> counts(n);
  kernels::count_hits(exec, col_supports, mask, counts);

  std::vector<Index> zeros;
  std::vector<Index> residual;
  for (std::size_t i = 0; i < n; ++i) {
    (counts[i] >= threshold ? zeros : residual).push_back(i);
  }
  return {IndexSet(std::move(zeros)), IndexSet(std::move(residual)), s_set};
}

Part1Result identify_zeros(const std::vector<std::vector<Index>>& col_supports,
                           std::size_t measurement_count, const IndexSet& s_set,
                           std::size_t threshold) {
  std::vector<std::size_t> offsets{0};
  std::vector<Index> flat;
  for (const auto& col : col_supports) {
    flat.insert(flat.end(), col.begin(), col.end());
    offsets.push_back(flat.size());
  }
  return identify_zeros(kernels::CompressedLists{offsets, flat}, measurement_count, s_set,
                        threshold);
}

}  // namespace twopart
