#pragma once

#include <optional>
#include <vector>

#include "mpa/graph.hpp"
#include "mpa/series.hpp"

/// Topology statistics over annotated graphs. Every function is a pure read
/// and may be called concurrently on the same graph.
namespace mpa::metrics {

enum class DegreeType { Customers, Providers, Peers };

const char* to_string(DegreeType type) noexcept;
std::uint32_t pick(const DegreeVector& d, DegreeType type) noexcept;

/// CCDF of total degree, optionally restricted to one class.
CcdfSeries degree_ccdf(const AnnotatedGraph& graph, std::optional<NodeClass> cls = {});

/// CCDF of one degree type over a class (ISPs in the usual plots).
CcdfSeries annotated_ccdf(const AnnotatedGraph& graph, DegreeType which,
                          std::optional<NodeClass> cls = NodeClass::Isp);

/// ISPs binned by provider count; mean customers or peers per bin.
BinnedSeries add_binned(const AnnotatedGraph& graph, DegreeType y);

/// Mean total degree of nodes reached over links of one kind, as a function
/// of the source node's total degree. For C2P the source is the customer and
/// the neighbor its provider; P2P links count from both ends. With
/// `normalize` the means are divided by n - 1.
BinnedSeries jdd_avg_neighbor(const AnnotatedGraph& graph, LinkKind kind, bool normalize);

/// Per degree k, the mean over degree-k nodes of their mean neighbor degree.
BinnedSeries avg_neighbor_degree(const AnnotatedGraph& graph,
                                 std::optional<NodeClass> cls = {});

/// Local clustering per node, 2T/(k(k-1)); zero for nodes with k < 2.
std::vector<double> local_clustering(const AnnotatedGraph& graph);

/// Local clustering averaged per degree bin; nodes with k < 2 are excluded.
BinnedSeries clustering_by_degree(const AnnotatedGraph& graph);

/// 2 |links| / |nodes|.
double mean_degree(const AnnotatedGraph& graph);

/// Total degrees (or one degree type) of the nodes of a class, in id order.
std::vector<std::uint32_t> degrees(const AnnotatedGraph& graph, std::optional<NodeClass> cls = {});
std::vector<std::uint32_t> degrees(const AnnotatedGraph& graph, DegreeType type,
                                   std::optional<NodeClass> cls);

}  // namespace mpa::metrics
