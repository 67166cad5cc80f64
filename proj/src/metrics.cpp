#include "mpa/metrics.hpp"

#include "mpa/error.hpp"
#include "mpa/kernels.hpp"

namespace mpa::metrics {

namespace {

void require_nodes(const AnnotatedGraph& g) {
  if (g.node_count() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no nodes");
}

bool selected(const NodeRecord& n, std::optional<NodeClass> cls) {
  return !cls || n.cls == *cls;
}

CcdfSeries checked_ccdf(const std::vector<std::uint32_t>& values) {
  if (values.empty()) throw Error(ErrorCode::EmptyGraph, "no nodes of the requested class");
  return make_ccdf(values);
}

}  // namespace

const char* to_string(DegreeType type) noexcept {
  switch (type) {
    case DegreeType::Customers: return "customers";
    case DegreeType::Providers: return "providers";
    case DegreeType::Peers: return "peers";
  }
  return "?";
}

std::uint32_t pick(const DegreeVector& d, DegreeType type) noexcept {
  switch (type) {
    case DegreeType::Customers: return d.customers;
    case DegreeType::Providers: return d.providers;
    case DegreeType::Peers: return d.peers;
  }
  return 0;
}

std::vector<std::uint32_t> degrees(const AnnotatedGraph& g, std::optional<NodeClass> cls) {
  std::vector<std::uint32_t> out;
  for (const auto& n : g.nodes()) {
    if (selected(n, cls)) out.push_back(g.degree(n.id));
  }
  return out;
}

std::vector<std::uint32_t> degrees(const AnnotatedGraph& g, DegreeType type,
                                   std::optional<NodeClass> cls) {
  std::vector<std::uint32_t> out;
  for (const auto& n : g.nodes()) {
    if (selected(n, cls)) out.push_back(pick(g.degree_vector(n.id), type));
  }
  return out;
}

CcdfSeries degree_ccdf(const AnnotatedGraph& g, std::optional<NodeClass> cls) {
  require_nodes(g);
  return checked_ccdf(degrees(g, cls));
}

CcdfSeries annotated_ccdf(const AnnotatedGraph& g, DegreeType which, std::optional<NodeClass> cls) {
  require_nodes(g);
  return checked_ccdf(degrees(g, which, cls));
}

BinnedSeries add_binned(const AnnotatedGraph& g, DegreeType y) {
  if (g.count(NodeClass::Isp) == 0) throw Error(ErrorCode::EmptyGraph, "graph has no ISPs");
  BinAccumulator acc;
  for (const auto& n : g.nodes()) {
    if (n.cls != NodeClass::Isp) continue;
    const auto d = g.degree_vector(n.id);
    acc.add(d.providers, pick(d, y));
  }
  return acc.finish();
}

BinnedSeries jdd_avg_neighbor(const AnnotatedGraph& g, LinkKind kind, bool normalize) {
  if (g.count(kind) == 0) {
    throw Error(ErrorCode::NoSuchLinks, std::string("graph has no ") + to_string(kind) + " links");
  }
  BinAccumulator acc;
  for (const auto& l : g.links()) {
    if (l.kind != kind) continue;
    const auto ka = g.degree(l.a);
    const auto kb = g.degree(l.b);
    acc.add(ka, kb);
    if (kind == LinkKind::P2P) acc.add(kb, ka);
  }
  auto series = acc.finish();
  if (normalize) {
    const double scale = g.node_count() > 1 ? static_cast<double>(g.node_count() - 1) : 1.0;
    for (auto& p : series.points) p.mean /= scale;
  }
  return series;
}

BinnedSeries avg_neighbor_degree(const AnnotatedGraph& g, std::optional<NodeClass> cls) {
  require_nodes(g);
  const auto csr = kernels::build_csr(g);
  const auto sums = kernels::neighbor_degree_sums(csr);
  BinAccumulator acc;
  for (const auto& n : g.nodes()) {
    const auto k = csr.degree(n.id);
    if (k == 0 || !selected(n, cls)) continue;
    acc.add(k, static_cast<double>(sums[n.id]) / k);
  }
  return acc.finish();
}

std::vector<double> local_clustering(const AnnotatedGraph& g) {
  const auto csr = kernels::build_csr(g);
  const auto tri = kernels::triangles(csr);
  std::vector<double> out(g.node_count(), 0.0);
  for (NodeId u = 0; u < out.size(); ++u) {
    const double k = csr.degree(u);
    if (k >= 2) out[u] = 2.0 * static_cast<double>(tri[u]) / (k * (k - 1.0));
  }
  return out;
}

BinnedSeries clustering_by_degree(const AnnotatedGraph& g) {
  require_nodes(g);
  const auto local = local_clustering(g);
  BinAccumulator acc;
  for (NodeId u = 0; u < local.size(); ++u) {
    const auto k = g.degree(u);
    if (k >= 2) acc.add(k, local[u]);
  }
  return acc.finish();
}

double mean_degree(const AnnotatedGraph& g) {
  require_nodes(g);
  return 2.0 * static_cast<double>(g.link_count()) / static_cast<double>(g.node_count());
}

}  // namespace mpa::metrics
