#include "mpa/generator.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <string>

#include "mpa/error.hpp"

namespace mpa {

namespace {
// Absorbs representation error in products like 3 * (7/3).
constexpr double kAccumulatorSlack = 1e-9;
}  // namespace

RateAccumulator::RateAccumulator(double rate, double residual)
    : rate_(rate), initial_residual_(residual) {
  if (!std::isfinite(rate) || rate < 0.0 || !(residual >= 0.0 && residual < 1.0)) {
    throw Error(ErrorCode::InvalidParams, "accumulator rate/residual out of range");
  }
}

std::uint64_t RateAccumulator::due(std::uint64_t ticks) const noexcept {
  return static_cast<std::uint64_t>(
      std::floor(static_cast<double>(ticks) * rate_ + initial_residual_ + kAccumulatorSlack));
}

std::uint64_t RateAccumulator::tick() {
  ++ticks_;
  const std::uint64_t total = due(ticks_);
  const std::uint64_t now = total - emitted_;
  emitted_ = total;
  return now;
}

double RateAccumulator::residual() const noexcept {
  const double r = static_cast<double>(ticks_) * rate_ + initial_residual_ -
                   static_cast<double>(emitted_);
  return r < 0.0 ? 0.0 : r;
}

EventCounts& EventCounts::operator+=(const EventCounts& o) {
  isp_arrivals += o.isp_arrivals;
  non_isp_arrivals += o.non_isp_arrivals;
  non_isp_links += o.non_isp_links;
  multihoming_links += o.multihoming_links;
  peering_links += o.peering_links;
  rewirings += o.rewirings;
  aborted_non_isp_links += o.aborted_non_isp_links;
  aborted_multihoming += o.aborted_multihoming;
  aborted_peering += o.aborted_peering;
  aborted_rewirings += o.aborted_rewirings;
  return *this;
}

void check_config(const GeneratorConfig& config) {
  check_params(config.params);
  if (config.target_isps < 2) {
    throw Error(ErrorCode::InvalidParams, "target_isps must be at least 2");
  }
  if (config.max_resample < 1) {
    throw Error(ErrorCode::InvalidParams, "max_resample must be at least 1");
  }
}

AnnotatedGraph seed_graph() {
  AnnotatedGraph g;
  const NodeId provider = g.add_node(NodeClass::Isp);
  const NodeId customer = g.add_node(NodeClass::Isp);
  g.add_c2p(customer, provider);
  return g;
}

Generator::Generator(GeneratorConfig config)
    : config_(config),
      graph_(seed_graph()),
      rng_(config.seed),
      non_isp_acc_(config.params.rho),
      extra_provider_acc_(config.params.m - 1.0),
      multihoming_acc_(config.params.nu),
      peering_acc_(config.params.c),
      bankruptcy_acc_(config.params.mu) {
  check_config(config_);
  for (const auto& n : graph_.nodes()) sampler_.push(graph_.degree(n.id));
  for (LinkId id = 0; id < graph_.link_count(); ++id) isp_c2p_links_.push_back(id);
}

void Generator::connect(NodeId a, NodeId b, LinkKind kind, NodeId customer) {
  const LinkId id = graph_.add_link(a, b, kind, customer);
  for (NodeId n : {a, b}) {
    if (graph_.node(n).cls == NodeClass::Isp) sampler_.add(n, 1);
  }
  if (kind == LinkKind::C2P && graph_.node(customer).cls == NodeClass::Isp) {
    isp_c2p_links_.push_back(id);
  }
}

std::optional<std::pair<NodeId, NodeId>> Generator::draw_free_pair() {
  for (unsigned attempt = 0; attempt < config_.max_resample; ++attempt) {
    const NodeId x = sampler_.sample(rng_);
    const NodeId y = sampler_.sample(rng_);
    if (x != y && !graph_.has_link(x, y)) return std::pair{x, y};
  }
  return std::nullopt;
}

bool Generator::add_multihoming_link() {
  const auto pair = draw_free_pair();
  if (!pair) return false;
  auto [x, y] = *pair;
  const auto kx = graph_.degree(x);
  const auto ky = graph_.degree(y);
  // Higher degree provides; on a tie the older node does.
  const bool x_provides = kx > ky || (kx == ky && x < y);
  const NodeId customer = x_provides ? y : x;
  connect(x, y, LinkKind::C2P, customer);
  return true;
}

bool Generator::add_peering_link() {
  const auto pair = draw_free_pair();
  if (!pair) return false;
  connect(pair->first, pair->second, LinkKind::P2P, pair->first);
  return true;
}

EventCounts Generator::add_non_isp() {
  EventCounts ev;
  const NodeId node = graph_.add_node(NodeClass::NonIsp);
  sampler_.push(0);
  ++ev.non_isp_arrivals;

  const std::uint64_t providers = 1 + extra_provider_acc_.tick();
  for (std::uint64_t k = 0; k < providers; ++k) {
    bool linked = false;
    for (unsigned attempt = 0; attempt < config_.max_resample && !linked; ++attempt) {
      const NodeId target = sampler_.sample(rng_);
      if (graph_.has_link(node, target)) continue;
      connect(node, target, LinkKind::C2P, node);
      linked = true;
    }
    if (linked) {
      ++ev.non_isp_links;
    } else {
      ++ev.aborted_non_isp_links;
    }
  }
  totals_ += ev;
  return ev;
}

void Generator::bankruptcy_rewire() {
  if (graph_.count(NodeClass::Isp) < 3 || isp_c2p_links_.empty()) {
    throw Error(ErrorCode::ResampleExhausted, "bankruptcy needs at least 3 ISPs");
  }
  for (unsigned attempt = 0; attempt < config_.max_resample; ++attempt) {
    const LinkId victim = isp_c2p_links_[rng_.below(isp_c2p_links_.size())];
    const NodeId acquirer = sampler_.sample(rng_);
    const auto& rec = graph_.link(victim);
    if (acquirer == rec.customer() || graph_.has_link(rec.customer(), acquirer)) continue;
    const NodeId old_provider = rec.provider();
    graph_.rewire_provider(victim, acquirer);
    sampler_.add(old_provider, -1);
    sampler_.add(acquirer, 1);
    return;
  }
  throw Error(ErrorCode::ResampleExhausted, "no valid bankruptcy shift found");
}

EventCounts Generator::step() {
  EventCounts ev;

  // The target is drawn before the newcomer has any weight, so it cannot
  // attach to itself.
  const NodeId target = sampler_.sample(rng_);
  const NodeId isp = graph_.add_node(NodeClass::Isp);
  sampler_.push(0);
  connect(isp, target, LinkKind::C2P, isp);
  ++ev.isp_arrivals;
  totals_.isp_arrivals += 1;

  for (std::uint64_t k = non_isp_acc_.tick(); k > 0; --k) {
    if (graph_.count(NodeClass::NonIsp) >= config_.target_non_isps) break;
    const auto sub = add_non_isp();
    ev.non_isp_arrivals += sub.non_isp_arrivals;
    ev.non_isp_links += sub.non_isp_links;
    ev.aborted_non_isp_links += sub.aborted_non_isp_links;
  }

  EventCounts links;
  for (std::uint64_t k = multihoming_acc_.tick(); k > 0; --k) {
    if (add_multihoming_link()) {
      ++links.multihoming_links;
    } else {
      ++links.aborted_multihoming;
    }
  }
  for (std::uint64_t k = peering_acc_.tick(); k > 0; --k) {
    if (add_peering_link()) {
      ++links.peering_links;
    } else {
      ++links.aborted_peering;
    }
  }
  for (std::uint64_t k = bankruptcy_acc_.tick(); k > 0; --k) {
    try {
      bankruptcy_rewire();
      ++links.rewirings;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResampleExhausted) throw;
      ++links.aborted_rewirings;
    }
  }
  totals_ += links;
  ev += links;

  ++steps_;
  if (config_.check_every != 0 && steps_ % config_.check_every == 0) {
    if (auto err = validate(graph_)) {
      throw Error(ErrorCode::KindViolation, "after step " + std::to_string(steps_) + ": " + *err);
    }
  }
  return ev;
}

GeneratorResult run(const GeneratorConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  Generator gen(config);
  while (gen.graph().count(NodeClass::Isp) < config.target_isps) gen.step();
  while (gen.graph().count(NodeClass::NonIsp) < config.target_non_isps) gen.add_non_isp();

  if (auto err = validate(gen.graph())) {
    throw Error(ErrorCode::KindViolation, "generated graph failed validation: " + *err);
  }
  GeneratorResult out;
  out.events = gen.totals();
  out.steps = gen.steps();
  out.seed = config.seed;
  out.graph = std::move(gen).release();
  out.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return out;
}

std::vector<GeneratorResult> run_ensemble(const GeneratorConfig& config, std::size_t runs) {
  check_config(config);
  std::vector<GeneratorResult> results(runs);
  std::vector<std::exception_ptr> failures(runs);
  const auto n = static_cast<std::int64_t>(runs);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      GeneratorConfig c = config;
      c.seed = config.seed + idx;
      results[idx] = run(c);
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return results;
}

}  // namespace mpa
