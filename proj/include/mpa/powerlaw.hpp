#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace mpa {

enum class FitMethod { DiscreteMle, CcdfRegression };

const char* to_string(FitMethod method) noexcept;

struct PowerLawFit {
  double gamma_hat = 0.0;
  std::uint64_t k_min = 0;
  std::size_t n_tail = 0;
  FitMethod method = FitMethod::DiscreteMle;
  // KS distance between the empirical tail CCDF and the fitted one.
  double ks_distance = 0.0;
};

struct FitOptions {
  FitMethod method = FitMethod::DiscreteMle;
  // When unset, k_min is chosen by minimizing the KS distance of the
  // maximum-likelihood fit.
  std::optional<std::uint64_t> k_min;
  std::size_t min_tail = 10;
};

/// Fits P(k) ~ k^-gamma to the tail k >= k_min of integer samples.
///
/// DiscreteMle uses gamma = 1 + n / sum ln(k_i / (k_min - 1/2)).
/// CcdfRegression regresses ln CCDF on ln k over the tail's distinct values
/// and returns 1 - slope. Zeros are ignored. Throws InsufficientTail when
/// fewer than min_tail samples (or a single distinct value) remain.
PowerLawFit fit_power_law(std::span<const std::uint64_t> samples, const FitOptions& options = {});

/// Convenience overload for degree vectors.
PowerLawFit fit_power_law(std::span<const std::uint32_t> samples, const FitOptions& options = {});

}  // namespace mpa
