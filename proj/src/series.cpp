#include "mpa/series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace mpa {

CcdfSeries make_ccdf(std::span<const std::uint32_t> values) {
  CcdfSeries out;
  out.population = values.size();
  if (values.empty()) return out;
  std::vector<std::uint32_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out.points.push_back({static_cast<double>(sorted[i]), static_cast<double>(sorted.size() - i) / n});
    i = j;
  }
  return out;
}

std::size_t BinnedSeries::population() const noexcept {
  std::size_t n = 0;
  for (const auto& p : points) n += p.count;
  return n;
}

DegreeBin degree_bin(std::uint64_t k) noexcept {
  if (k <= 16) return {k, k};
  const auto hi = std::bit_ceil(k);
  return {hi / 2 + 1, hi};
}

double DegreeBin::key() const noexcept {
  if (lo == hi) return static_cast<double>(lo);
  return std::sqrt(static_cast<double>(lo) * static_cast<double>(hi));
}

void BinAccumulator::merge(const BinAccumulator& other) {
  for (const auto& [lo, cell] : other.cells_) {
    auto& mine = cells_[lo];
    mine.sum += cell.sum;
    mine.count += cell.count;
  }
}

BinnedSeries BinAccumulator::finish() const {
  BinnedSeries out;
  out.points.reserve(cells_.size());
  for (const auto& [lo, cell] : cells_) {
    out.points.push_back({degree_bin(lo).key(), cell.sum / static_cast<double>(cell.count), cell.count});
  }
  return out;
}

}  // namespace mpa
