#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mpa/graph.hpp"
#include "mpa/params.hpp"
#include "mpa/rng.hpp"
#include "mpa/sampler.hpp"

namespace mpa {

/// Deterministic event source: after T ticks it has emitted exactly
/// floor(T * rate + initial residual) events.
class RateAccumulator {
 public:
  explicit RateAccumulator(double rate = 0.0, double residual = 0.0);

  /// Advances one unit of time and returns the number of events due.
  std::uint64_t tick();

  double rate() const noexcept { return rate_; }
  /// Fractional carry in [0, 1).
  double residual() const noexcept;
  std::uint64_t ticks() const noexcept { return ticks_; }
  std::uint64_t emitted() const noexcept { return emitted_; }

 private:
  std::uint64_t due(std::uint64_t ticks) const noexcept;

  double rate_;
  double initial_residual_;
  std::uint64_t ticks_ = 0;
  std::uint64_t emitted_ = 0;
};

struct GeneratorConfig {
  MpaParams params = measured_internet_params();
  std::size_t target_isps = 7200;
  std::size_t target_non_isps = 16800;
  std::uint64_t seed = 1;
  unsigned max_resample = 100;
  // Full validate() every this many steps; 0 disables.
  std::size_t check_every = 0;
};

/// Throws Error(InvalidParams) for an unusable configuration.
void check_config(const GeneratorConfig& config);

struct EventCounts {
  std::uint64_t isp_arrivals = 0;
  std::uint64_t non_isp_arrivals = 0;
  std::uint64_t non_isp_links = 0;
  std::uint64_t multihoming_links = 0;
  std::uint64_t peering_links = 0;
  std::uint64_t rewirings = 0;
  std::uint64_t aborted_non_isp_links = 0;
  std::uint64_t aborted_multihoming = 0;
  std::uint64_t aborted_peering = 0;
  std::uint64_t aborted_rewirings = 0;

  EventCounts& operator+=(const EventCounts& o);
  friend bool operator==(const EventCounts&, const EventCounts&) = default;
};

/// Two ISPs joined by one C2P link; node 1 is the customer of node 0.
AnnotatedGraph seed_graph();

/// MPA growth engine. Starts from seed_graph() and keeps a preferential
/// sampler whose weight for every ISP equals its total degree.
class Generator {
 public:
  explicit Generator(GeneratorConfig config);

  /// One unit of time: ISP arrival, non-ISP arrivals, multihoming links,
  /// peering links, then bankruptcy rewirings. Returns this step's events.
  /// Non-ISP arrivals stop once target_non_isps is reached.
  EventCounts step();

  /// Adds one non-ISP together with its providers.
  EventCounts add_non_isp();

  /// Shifts the provider end of a uniformly chosen ISP-to-ISP C2P link to a
  /// preferentially chosen ISP. Throws ResampleExhausted when no valid
  /// shift is found within max_resample attempts.
  void bankruptcy_rewire();

  /// Degree-proportional draw over ISPs.
  NodeId sample_target() { return sampler_.sample(rng_); }

  const AnnotatedGraph& graph() const noexcept { return graph_; }
  AnnotatedGraph release() && { return std::move(graph_); }
  const PreferentialSampler& sampler() const noexcept { return sampler_; }
  const GeneratorConfig& config() const noexcept { return config_; }
  const EventCounts& totals() const noexcept { return totals_; }
  std::uint64_t steps() const noexcept { return steps_; }

 private:
  void connect(NodeId a, NodeId b, LinkKind kind, NodeId customer);
  std::optional<std::pair<NodeId, NodeId>> draw_free_pair();
  bool add_multihoming_link();
  bool add_peering_link();

  GeneratorConfig config_;
  AnnotatedGraph graph_;
  PreferentialSampler sampler_;
  Rng rng_;
  RateAccumulator non_isp_acc_;
  RateAccumulator extra_provider_acc_;
  RateAccumulator multihoming_acc_;
  RateAccumulator peering_acc_;
  RateAccumulator bankruptcy_acc_;
  std::vector<LinkId> isp_c2p_links_;
  EventCounts totals_;
  std::uint64_t steps_ = 0;
};

struct GeneratorResult {
  AnnotatedGraph graph;
  EventCounts events;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  double wall_time_seconds = 0.0;
};

/// Grows until the ISP target is met, then adds any non-ISPs still owed.
/// The result is validated and reproducible bit-for-bit from config.seed.
GeneratorResult run(const GeneratorConfig& config);

/// Independent runs with seeds config.seed + i, executed in parallel.
std::vector<GeneratorResult> run_ensemble(const GeneratorConfig& config, std::size_t runs);

}  // namespace mpa
