#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace mpa {

using NodeId = std::uint32_t;
using LinkId = std::uint32_t;
using AsNumber = std::uint64_t;

enum class NodeClass : std::uint8_t { Isp, NonIsp };
enum class LinkKind : std::uint8_t { C2P, P2P };

const char* to_string(NodeClass cls) noexcept;
const char* to_string(LinkKind kind) noexcept;

struct NodeRecord {
  NodeId id = 0;
  NodeClass cls = NodeClass::Isp;
  // Birth order; equal to id since ids are dense and assigned on insertion.
  std::uint32_t arrival_index = 0;
  // External name (AS number). Synthetic graphs use the node id.
  AsNumber label = 0;
};

/// For C2P links `a` is the customer and `b` the provider. P2P links are
/// unordered; `a` is whichever endpoint was passed first.
struct LinkRecord {
  NodeId a = 0;
  NodeId b = 0;
  LinkKind kind = LinkKind::C2P;

  NodeId customer() const noexcept { return a; }
  NodeId provider() const noexcept { return b; }
  NodeId other(NodeId n) const noexcept { return n == a ? b : a; }
};

struct DegreeVector {
  std::uint32_t customers = 0;
  std::uint32_t providers = 0;
  std::uint32_t peers = 0;

  std::uint32_t total() const noexcept { return customers + providers + peers; }
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

struct Incidence {
  NodeId neighbor;
  LinkId link;
};

/// Simple undirected graph whose links carry a business-relationship
/// annotation. Mutation is single-writer; concurrent reads are safe once
/// construction is finished.
class AnnotatedGraph {
 public:
  AnnotatedGraph() = default;

  NodeId add_node(NodeClass cls);
  NodeId add_node(NodeClass cls, AsNumber label);

  /// Generic insertion. For C2P, `customer` must name a or b.
  LinkId add_link(NodeId a, NodeId b, LinkKind kind, std::optional<NodeId> customer = {});
  LinkId add_c2p(NodeId customer, NodeId provider) {
    return add_link(customer, provider, LinkKind::C2P, customer);
  }
  LinkId add_p2p(NodeId a, NodeId b) { return add_link(a, b, LinkKind::P2P); }

  /// Moves the provider end of a C2P link to `new_provider`. Link id and
  /// customer are preserved.
  void rewire_provider(LinkId link, NodeId new_provider);

  /// Overwrites a node's class without re-checking incident links. Used by
  /// ingestion, where real data may contradict the model's class rules;
  /// run validate() afterwards.
  void set_class(NodeId node, NodeClass cls);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t link_count() const noexcept { return links_.size(); }
  std::size_t count(NodeClass cls) const noexcept {
    return cls == NodeClass::Isp ? isp_count_ : nodes_.size() - isp_count_;
  }
  std::size_t count(LinkKind kind) const noexcept {
    return kind == LinkKind::P2P ? p2p_count_ : links_.size() - p2p_count_;
  }

  const NodeRecord& node(NodeId id) const;
  const LinkRecord& link(LinkId id) const;
  std::span<const NodeRecord> nodes() const noexcept { return nodes_; }
  std::span<const LinkRecord> links() const noexcept { return links_; }
  std::span<const Incidence> neighbors(NodeId id) const;

  DegreeVector degree_vector(NodeId id) const;
  std::uint32_t degree(NodeId id) const { return degree_vector(id).total(); }

  bool contains(NodeId id) const noexcept { return id < nodes_.size(); }
  bool has_link(NodeId a, NodeId b) const;
  std::optional<LinkId> find_link(NodeId a, NodeId b) const;
  std::optional<NodeId> find_label(AsNumber label) const;

 private:
  static std::uint64_t pair_key(NodeId a, NodeId b) noexcept;
  void require_node(NodeId id) const;
  void detach(NodeId node, LinkId link);

  std::vector<NodeRecord> nodes_;
  std::vector<LinkRecord> links_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<DegreeVector> degrees_;
  std::unordered_set<std::uint64_t> pairs_;
  std::unordered_map<AsNumber, NodeId> by_label_;
  std::size_t isp_count_ = 0;
  std::size_t p2p_count_ = 0;
};

enum class ValidationMode {
  Strict,
  // Class-rule violations (non-ISP with customers, peering non-ISP, ...)
  // are tolerated; structural ones still fail.
  Ingest,
};

/// Full invariant sweep. Returns the first violation found, or nullopt.
std::optional<std::string> validate(const AnnotatedGraph& graph,
                                    ValidationMode mode = ValidationMode::Strict);

/// Number of links whose endpoints break the class rules.
std::size_t count_class_violations(const AnnotatedGraph& graph);

}  // namespace mpa
