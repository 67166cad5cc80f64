#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace mpa {

struct CcdfPoint {
  double value;
  double fraction;  // share of the population with value >= this one
};

struct CcdfSeries {
  std::vector<CcdfPoint> points;
  std::size_t population = 0;
};

/// CCDF over the distinct values present in `values`.
CcdfSeries make_ccdf(std::span<const std::uint32_t> values);

struct BinnedPoint {
  double key;
  double mean;
  std::size_t count;
};

struct BinnedSeries {
  std::vector<BinnedPoint> points;

  std::size_t population() const noexcept;
};

/// Degree bins: one bin per value up to 16, then (2^j, 2^(j+1)] above.
struct DegreeBin {
  std::uint64_t lo;
  std::uint64_t hi;
  double key() const noexcept;
};

DegreeBin degree_bin(std::uint64_t k) noexcept;

/// Accumulates samples into degree bins and reports per-bin means.
class BinAccumulator {
 public:
  void add(std::uint64_t k, double sample) {
    auto& cell = cells_[degree_bin(k).lo];
    cell.sum += sample;
    ++cell.count;
  }
  void merge(const BinAccumulator& other);
  BinnedSeries finish() const;

 private:
  struct Cell {
    double sum = 0.0;
    std::size_t count = 0;
  };
  std::map<std::uint64_t, Cell> cells_;
};

}  // namespace mpa
