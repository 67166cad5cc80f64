#include "mpa/graph.hpp"

#include <algorithm>
#include <string>

#include "mpa/error.hpp"

namespace mpa {

const char* to_string(NodeClass cls) noexcept {
  return cls == NodeClass::Isp ? "isp" : "non-isp";
}

const char* to_string(LinkKind kind) noexcept {
  return kind == LinkKind::C2P ? "c2p" : "p2p";
}

std::uint64_t AnnotatedGraph::pair_key(NodeId a, NodeId b) noexcept {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

void AnnotatedGraph::require_node(NodeId id) const {
  if (id >= nodes_.size()) {
    throw Error(ErrorCode::UnknownNode, "node " + std::to_string(id));
  }
}

NodeId AnnotatedGraph::add_node(NodeClass cls) { return add_node(cls, nodes_.size()); }

NodeId AnnotatedGraph::add_node(NodeClass cls, AsNumber label) {
  const auto id = static_cast<NodeId>(nodes_.size());
  if (by_label_.contains(label)) {
    throw Error(ErrorCode::InvalidParams, "duplicate node label " + std::to_string(label));
  }
  nodes_.push_back(NodeRecord{id, cls, id, label});
  adjacency_.emplace_back();
  degrees_.emplace_back();
  by_label_.emplace(label, id);
  if (cls == NodeClass::Isp) ++isp_count_;
  return id;
}

LinkId AnnotatedGraph::add_link(NodeId a, NodeId b, LinkKind kind,
                                std::optional<NodeId> customer) {
  require_node(a);
  require_node(b);
  if (a == b) throw Error(ErrorCode::SelfLoop, "node " + std::to_string(a));
  if (pairs_.contains(pair_key(a, b))) {
    throw Error(ErrorCode::DuplicateLink, std::to_string(a) + "-" + std::to_string(b));
  }

  LinkRecord rec{a, b, kind};
  if (kind == LinkKind::P2P) {
    if (nodes_[a].cls != NodeClass::Isp || nodes_[b].cls != NodeClass::Isp) {
      throw Error(ErrorCode::KindViolation, "p2p link requires two ISPs");
    }
  } else {
    if (!customer || (*customer != a && *customer != b)) {
      throw Error(ErrorCode::KindViolation, "c2p link needs a customer endpoint");
    }
    rec.a = *customer;
    rec.b = *customer == a ? b : a;
    if (nodes_[rec.b].cls != NodeClass::Isp) {
      throw Error(ErrorCode::KindViolation, "provider must be an ISP");
    }
  }

  const auto id = static_cast<LinkId>(links_.size());
  links_.push_back(rec);
  pairs_.insert(pair_key(a, b));
  adjacency_[rec.a].push_back({rec.b, id});
  adjacency_[rec.b].push_back({rec.a, id});
  if (kind == LinkKind::P2P) {
    ++degrees_[rec.a].peers;
    ++degrees_[rec.b].peers;
    ++p2p_count_;
  } else {
    ++degrees_[rec.a].providers;
    ++degrees_[rec.b].customers;
  }
  return id;
}

void AnnotatedGraph::detach(NodeId node, LinkId link) {
  auto& adj = adjacency_[node];
  auto it = std::find_if(adj.begin(), adj.end(), [&](const Incidence& e) { return e.link == link; });
  adj.erase(it);
}

void AnnotatedGraph::rewire_provider(LinkId link_id, NodeId new_provider) {
  if (link_id >= links_.size()) {
    throw Error(ErrorCode::InvalidParams, "unknown link " + std::to_string(link_id));
  }
  require_node(new_provider);
  auto& rec = links_[link_id];
  if (rec.kind != LinkKind::C2P) {
    throw Error(ErrorCode::KindViolation, "only c2p links can be rewired");
  }
  if (new_provider == rec.customer()) {
    throw Error(ErrorCode::SelfLoop, "node " + std::to_string(new_provider));
  }
  if (pairs_.contains(pair_key(rec.customer(), new_provider))) {
    throw Error(ErrorCode::DuplicateLink,
                std::to_string(rec.customer()) + "-" + std::to_string(new_provider));
  }
  if (nodes_[new_provider].cls != NodeClass::Isp) {
    throw Error(ErrorCode::KindViolation, "provider must be an ISP");
  }

  const NodeId old_provider = rec.provider();
  detach(old_provider, link_id);
  pairs_.erase(pair_key(rec.customer(), old_provider));
  --degrees_[old_provider].customers;

  rec.b = new_provider;
  for (auto& e : adjacency_[rec.customer()]) {
    if (e.link == link_id) e.neighbor = new_provider;
  }
  adjacency_[new_provider].push_back({rec.customer(), link_id});
  pairs_.insert(pair_key(rec.customer(), new_provider));
  ++degrees_[new_provider].customers;
}

void AnnotatedGraph::set_class(NodeId node, NodeClass cls) {
  require_node(node);
  auto& rec = nodes_[node];
  if (rec.cls == cls) return;
  if (cls == NodeClass::Isp) {
    ++isp_count_;
  } else {
    --isp_count_;
  }
  rec.cls = cls;
}

const NodeRecord& AnnotatedGraph::node(NodeId id) const {
  require_node(id);
  return nodes_[id];
}

const LinkRecord& AnnotatedGraph::link(LinkId id) const {
  if (id >= links_.size()) {
    throw Error(ErrorCode::InvalidParams, "unknown link " + std::to_string(id));
  }
  return links_[id];
}

std::span<const Incidence> AnnotatedGraph::neighbors(NodeId id) const {
  require_node(id);
  return adjacency_[id];
}

DegreeVector AnnotatedGraph::degree_vector(NodeId id) const {
  require_node(id);
  return degrees_[id];
}

bool AnnotatedGraph::has_link(NodeId a, NodeId b) const {
  return pairs_.contains(pair_key(a, b));
}

std::optional<LinkId> AnnotatedGraph::find_link(NodeId a, NodeId b) const {
  if (!contains(a) || !contains(b) || !has_link(a, b)) return std::nullopt;
  const bool scan_a = adjacency_[a].size() <= adjacency_[b].size();
  const auto& adj = adjacency_[scan_a ? a : b];
  const NodeId target = scan_a ? b : a;
  for (const auto& e : adj) {
    if (e.neighbor == target) return e.link;
  }
  return std::nullopt;
}

std::optional<NodeId> AnnotatedGraph::find_label(AsNumber label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string describe(const LinkRecord& l, LinkId id) {
  return "link " + std::to_string(id) + " (" + std::to_string(l.a) + "," + std::to_string(l.b) +
         "," + to_string(l.kind) + ")";
}

bool breaks_class_rules(const AnnotatedGraph& g, const LinkRecord& l) {
  if (l.kind == LinkKind::P2P) {
    return g.node(l.a).cls != NodeClass::Isp || g.node(l.b).cls != NodeClass::Isp;
  }
  return g.node(l.provider()).cls != NodeClass::Isp;
}

}  // namespace

std::size_t count_class_violations(const AnnotatedGraph& graph) {
  std::size_t n = 0;
  for (const auto& l : graph.links()) {
    if (breaks_class_rules(graph, l)) ++n;
  }
  return n;
}

std::optional<std::string> validate(const AnnotatedGraph& graph, ValidationMode mode) {
  const auto nodes = graph.nodes();
  std::size_t isps = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id != i || nodes[i].arrival_index != i) {
      return "node " + std::to_string(i) + " has inconsistent id/arrival_index";
    }
    if (nodes[i].cls == NodeClass::Isp) ++isps;
  }
  if (isps != graph.count(NodeClass::Isp)) return std::string("class counts out of sync");

  std::unordered_set<std::uint64_t> seen;
  std::vector<DegreeVector> tally(nodes.size());
  std::size_t p2p = 0;
  const auto links = graph.links();
  for (LinkId id = 0; id < links.size(); ++id) {
    const auto& l = links[id];
    if (l.a >= nodes.size() || l.b >= nodes.size()) return describe(l, id) + " has unknown endpoint";
    if (l.a == l.b) return describe(l, id) + " is a self-loop";
    const auto key = (static_cast<std::uint64_t>(std::min(l.a, l.b)) << 32) | std::max(l.a, l.b);
    if (!seen.insert(key).second) return describe(l, id) + " duplicates an earlier link";
    if (mode == ValidationMode::Strict && breaks_class_rules(graph, l)) {
      return describe(l, id) + " violates class rules";
    }
    if (l.kind == LinkKind::P2P) {
      ++tally[l.a].peers;
      ++tally[l.b].peers;
      ++p2p;
    } else {
      ++tally[l.a].providers;
      ++tally[l.b].customers;
    }
  }
  if (p2p != graph.count(LinkKind::P2P)) return std::string("link kind counts out of sync");

  for (NodeId n = 0; n < nodes.size(); ++n) {
    if (!(tally[n] == graph.degree_vector(n))) {
      return "node " + std::to_string(n) + " degree vector disagrees with links";
    }
    const auto adj = graph.neighbors(n);
    if (adj.size() != tally[n].total()) {
      return "node " + std::to_string(n) + " adjacency size disagrees with links";
    }
    for (const auto& e : adj) {
      if (e.link >= links.size()) return "node " + std::to_string(n) + " references unknown link";
      const auto& l = links[e.link];
      if ((l.a != n && l.b != n) || l.other(n) != e.neighbor) {
        return "node " + std::to_string(n) + " adjacency is not symmetric with " +
               describe(l, e.link);
      }
    }
    if (mode == ValidationMode::Strict && nodes[n].cls == NodeClass::NonIsp &&
        (tally[n].customers != 0 || tally[n].peers != 0)) {
      return "non-ISP node " + std::to_string(n) + " has customers or peers";
    }
  }
  return std::nullopt;
}

}  // namespace mpa
