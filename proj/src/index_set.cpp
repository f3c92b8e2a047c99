#include "twopart/index_set.hpp"

#include <algorithm>
#include <numeric>

#include "twopart/error.hpp"

namespace twopart {

IndexSet::IndexSet(std::vector<Index> sorted) : indices_(std::move(sorted)) {
  const auto bad = std::adjacent_find(indices_.begin(), indices_.end(),
                                      [](Index a, Index b) { return a >= b; });
  require(bad == indices_.end(), "index set must be strictly increasing");
}

IndexSet IndexSet::range(Index count) {
  IndexSet out;
  out.indices_.resize(count);
  std::iota(out.indices_.begin(), out.indices_.end(), Index{0});
  return out;
}

bool IndexSet::contains(Index value) const {
  return std::binary_search(indices_.begin(), indices_.end(), value);
}

}  // namespace twopart
