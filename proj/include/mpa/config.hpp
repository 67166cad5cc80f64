#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>

#include "mpa/generator.hpp"
#include "mpa/params.hpp"

namespace mpa {

/// Settings read from a run-config file. Every field is optional so that
/// command-line flags can be layered on top.
struct RunSettings {
  std::optional<double> rho, nu, c, m, mu;
  std::optional<double> peering_fraction;
  std::optional<std::size_t> target_isps, target_non_isps;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> max_resample;

  /// Fields set in `over` replace ours.
  void merge(const RunSettings& over);

  /// Resolves into parameters, starting from `base`. When a peering fraction
  /// is set, c is derived from it (an explicit c then conflicts).
  MpaParams params(const MpaParams& base = measured_internet_params()) const;
  GeneratorConfig generator_config() const;
};

/// Accepts a JSON object or `key = value` / `key: value` lines with `#`
/// comments. Keys: rho, nu, c, m, m_nonisp (alias of m), mu,
/// peering_fraction, target_isps, target_non_isps, seed, max_resample.
/// Throws Error(InvalidParams) on unknown keys or bad values.
RunSettings parse_run_settings(std::istream& in);

}  // namespace mpa
