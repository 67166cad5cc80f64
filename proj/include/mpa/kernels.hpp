#pragma once

#include <cstdint>
#include <vector>

#include "mpa/graph.hpp"

// Per-node graph statistics. The top-level functions are OpenMP-parallel
// over nodes; mpa::kernels::serial holds straightforward single-threaded
// versions computed by a different route, kept as test references and for
// the benchmark.
namespace mpa::kernels {

/// Compressed adjacency of the undirected simple view, neighbor lists sorted.
struct Csr {
  std::vector<std::uint64_t> offsets;  // size n + 1
  std::vector<NodeId> targets;

  std::size_t size() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::uint32_t degree(NodeId u) const noexcept {
    return static_cast<std::uint32_t>(offsets[u + 1] - offsets[u]);
  }
};

Csr build_csr(const AnnotatedGraph& graph);

/// Triangles through each node, ignoring link annotation.
std::vector<std::uint64_t> triangles(const Csr& csr);

/// Sum of neighbor total degrees for each node.
std::vector<std::uint64_t> neighbor_degree_sums(const Csr& csr);

namespace serial {

std::vector<std::uint64_t> triangles(const AnnotatedGraph& graph);
std::vector<std::uint64_t> neighbor_degree_sums(const AnnotatedGraph& graph);

}  // namespace serial

}  // namespace mpa::kernels
