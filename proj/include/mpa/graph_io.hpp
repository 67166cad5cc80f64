#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "mpa/graph.hpp"
#include "mpa/ingest.hpp"

namespace mpa::io {

/// CAIDA-style relationship lines in link order: `provider|customer|-1`
/// for C2P and `a|b|0` for P2P, preceded by `#` header comments.
void write_as_rel(const AnnotatedGraph& graph, std::ostream& out);

/// Node sidecar: AS number, class and arrival index for every node, one
/// node per line, in arrival order.
void write_classes_json(const AnnotatedGraph& graph, std::ostream& out);

/// Reads a sidecar back into seed nodes for ingest::parse_as_rel.
std::vector<ingest::SeedNode> read_classes_json(std::istream& in);

/// Sidecar path conventionally paired with an as-rel file:
/// `x.as-rel.txt` -> `x.classes.json`, anything else -> `<path>.classes.json`.
std::filesystem::path sidecar_path(const std::filesystem::path& as_rel);

struct LoadedGraph {
  ingest::IngestResult ingest;
  bool classes_from_sidecar = false;
};

/// Loads an as-rel file plus its sidecar when one is given or present next
/// to it. Throws Error(Io) when a file cannot be opened.
LoadedGraph load_graph(const std::filesystem::path& as_rel,
                       const std::optional<std::filesystem::path>& classes = std::nullopt,
                       const ingest::CodeMap& map = {});

/// Writes `<stem>.as-rel.txt` and `<stem>.classes.json` into `dir`.
void save_graph(const AnnotatedGraph& graph, const std::filesystem::path& dir,
                const std::string& stem = "graph");

}  // namespace mpa::io
