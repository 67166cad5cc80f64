#pragma once

#include <cstdint>
#include <vector>

#include "mpa/graph.hpp"
#include "mpa/rng.hpp"

namespace mpa {

/// Integer-weighted sampler over dense node ids backed by a Fenwick tree.
/// Draws and weight updates are O(log n); appending a node is O(log n).
class PreferentialSampler {
 public:
  PreferentialSampler() : tree_(1, 0) {}

  std::size_t size() const noexcept { return weights_.size(); }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t weight(NodeId id) const { return weights_.at(id); }

  /// Appends the next id with the given weight.
  NodeId push(std::uint64_t weight);
  void add(NodeId id, std::int64_t delta);
  void set(NodeId id, std::uint64_t weight) {
    add(id, static_cast<std::int64_t>(weight) - static_cast<std::int64_t>(weights_.at(id)));
  }

  /// Smallest id whose inclusive prefix weight exceeds r. Requires r < total().
  NodeId locate(std::uint64_t r) const;

  /// Draws an id with probability weight/total. Throws EmptySampler when
  /// every weight is zero.
  NodeId sample(Rng& rng) const;

 private:
  std::uint64_t prefix(std::size_t count) const;

  std::vector<std::uint64_t> tree_;  // 1-based
  std::vector<std::uint64_t> weights_;
  std::uint64_t total_ = 0;
};

}  // namespace mpa
