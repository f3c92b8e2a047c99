#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace twopart {

using Index = std::size_t;

/// Strictly increasing list of 0-based indices (coefficients or measurements).
class IndexSet {
 public:
  IndexSet() = default;

  /// Validates strict ordering; throws InvalidParameter otherwise.
  explicit IndexSet(std::vector<Index> sorted);

  static IndexSet range(Index count);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  Index operator[](std::size_t pos) const { return indices_[pos]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  std::span<const Index> view() const noexcept { return indices_; }

  bool contains(Index value) const;
  /// True when every index is < bound.
  bool within(Index bound) const noexcept {
    return indices_.empty() || indices_.back() < bound;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<Index> indices_;
};

}  // namespace twopart
