#include "mpa/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace mpa::kernels {

Csr build_csr(const AnnotatedGraph& graph) {
  Csr csr;
  const auto n = graph.node_count();
  csr.offsets.assign(n + 1, 0);
  for (NodeId u = 0; u < n; ++u) csr.offsets[u + 1] = csr.offsets[u] + graph.neighbors(u).size();
  csr.targets.resize(csr.offsets[n]);

  const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nn; ++i) {
    const auto u = static_cast<NodeId>(i);
    auto out = csr.targets.begin() + static_cast<std::ptrdiff_t>(csr.offsets[u]);
    auto end = out;
    for (const auto& e : graph.neighbors(u)) *end++ = e.neighbor;
    std::sort(out, end);
  }
  return csr;
}

std::vector<std::uint64_t> triangles(const Csr& csr) {
  const auto n = csr.size();
  std::vector<std::uint64_t> tri(n, 0);
  const auto nn = static_cast<std::int64_t>(n);

#pragma omp parallel
  {
    std::vector<std::uint8_t> mark(n, 0);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < nn; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const auto first = csr.offsets[u];
      const auto last = csr.offsets[u + 1];
      if (last - first < 2) continue;
      for (auto p = first; p < last; ++p) mark[csr.targets[p]] = 1;
      std::uint64_t closed = 0;
      for (auto p = first; p < last; ++p) {
        const NodeId v = csr.targets[p];
        for (auto q = csr.offsets[v]; q < csr.offsets[v + 1]; ++q) closed += mark[csr.targets[q]];
      }
      for (auto p = first; p < last; ++p) mark[csr.targets[p]] = 0;
      // Each triangle {u,v,w} is seen from v and from w.
      tri[u] = closed / 2;
    }
  }
  return tri;
}

std::vector<std::uint64_t> neighbor_degree_sums(const Csr& csr) {
  const auto n = csr.size();
  std::vector<std::uint64_t> sums(n, 0);
  const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < nn; ++i) {
    const auto u = static_cast<std::size_t>(i);
    std::uint64_t s = 0;
    for (auto p = csr.offsets[u]; p < csr.offsets[u + 1]; ++p) s += csr.degree(csr.targets[p]);
    sums[u] = s;
  }
  return sums;
}

namespace serial {

std::vector<std::uint64_t> triangles(const AnnotatedGraph& graph) {
  std::vector<std::uint64_t> tri(graph.node_count(), 0);
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const auto adj = graph.neighbors(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      for (std::size_t j = i + 1; j < adj.size(); ++j) {
        if (graph.has_link(adj[i].neighbor, adj[j].neighbor)) ++tri[u];
      }
    }
  }
  return tri;
}

std::vector<std::uint64_t> neighbor_degree_sums(const AnnotatedGraph& graph) {
  std::vector<std::uint64_t> sums(graph.node_count(), 0);
  for (const auto& l : graph.links()) {
    sums[l.a] += graph.degree(l.b);
    sums[l.b] += graph.degree(l.a);
  }
  return sums;
}

}  // namespace serial

}  // namespace mpa::kernels
