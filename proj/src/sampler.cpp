#include "mpa/sampler.hpp"

#include <bit>
#include <string>

#include "mpa/error.hpp"

namespace mpa {

namespace {
constexpr std::size_t lowbit(std::size_t i) { return i & (~i + 1); }
}  // namespace

std::uint64_t PreferentialSampler::prefix(std::size_t count) const {
  std::uint64_t sum = 0;
  for (std::size_t i = count; i > 0; i -= lowbit(i)) sum += tree_[i];
  return sum;
}

NodeId PreferentialSampler::push(std::uint64_t weight) {
  const std::size_t i = weights_.size() + 1;
  // tree_[i] covers (i - lowbit(i), i].
  tree_.push_back(weight + prefix(i - 1) - prefix(i - lowbit(i)));
  weights_.push_back(weight);
  total_ += weight;
  return static_cast<NodeId>(i - 1);
}

void PreferentialSampler::add(NodeId id, std::int64_t delta) {
  if (id >= weights_.size()) {
    throw Error(ErrorCode::UnknownNode, "sampler has no node " + std::to_string(id));
  }
  if (delta < 0 && static_cast<std::uint64_t>(-delta) > weights_[id]) {
    throw Error(ErrorCode::InvalidParams, "negative sampler weight for node " + std::to_string(id));
  }
  const auto d = static_cast<std::uint64_t>(delta);  // modular arithmetic handles negatives
  weights_[id] += d;
  total_ += d;
  for (std::size_t i = id + 1; i < tree_.size(); i += lowbit(i)) tree_[i] += d;
}

NodeId PreferentialSampler::locate(std::uint64_t r) const {
  const std::size_t n = weights_.size();
  std::size_t pos = 0;
  for (std::size_t step = std::bit_floor(n); step > 0; step >>= 1) {
    const std::size_t next = pos + step;
    if (next <= n && tree_[next] <= r) {
      pos = next;
      r -= tree_[next];
    }
  }
  return static_cast<NodeId>(pos);
}

NodeId PreferentialSampler::sample(Rng& rng) const {
  if (total_ == 0) throw Error(ErrorCode::EmptySampler, "all sampler weights are zero");
  return locate(rng.below(total_));
}

}  // namespace mpa
