#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mpa/graph.hpp"

namespace mpa::ingest {

/// Which field of a `A|B|-1` record is the provider. Code 1 is the mirror
/// image of code -1 under either orientation.
enum class CodeOrientation { ProviderFirst, CustomerFirst };

enum class SiblingPolicy { AsPeering, Drop };

struct CodeMap {
  CodeOrientation orientation = CodeOrientation::ProviderFirst;
  SiblingPolicy siblings = SiblingPolicy::AsPeering;
};

/// Parses "provider-first" / "customer-first".
CodeOrientation parse_orientation(const std::string& text);

struct AsRelRecord {
  AsNumber as_a = 0;
  AsNumber as_b = 0;
  int code = 0;
};

/// A node supplied ahead of parsing (e.g. from a class sidecar). Seeded
/// nodes keep their order and class; unseeded ones are appended in order of
/// first appearance.
struct SeedNode {
  AsNumber as_number;
  NodeClass cls;
};

struct IngestResult {
  AnnotatedGraph graph;
  std::size_t records = 0;
  std::size_t duplicate_records = 0;
  std::size_t sibling_records = 0;
  std::size_t dropped_siblings = 0;
  // Links that break class rules because of seeded classes.
  std::size_t class_inconsistencies = 0;
  std::vector<std::string> warnings;
};

/// Reads CAIDA-style `A|B|code` lines; `#` lines and blank lines are
/// skipped and fields past the third are ignored. Code 0 is peering, -1/1
/// customer-provider per `map`, 2 sibling per `map.siblings`. Repeated
/// identical pairs are kept once (first wins, counted as duplicates).
/// Without seeds, nodes with customers or peers are ISPs and the rest
/// non-ISPs. Throws MalformedLine (with the line number) and
/// ConflictingDuplicate.
IngestResult parse_as_rel(std::istream& in, const CodeMap& map = {},
                          std::span<const SeedNode> seeds = {});

struct TaxonomyRecord {
  AsNumber as_number = 0;
  bool is_isp = false;
  std::string label;
};

struct TaxonomyOptions {
  // ' ' splits on any whitespace.
  char delimiter = '|';
  // Lower-case labels counted as ISPs.
  std::set<std::string> isp_labels = {"t1", "t2", "isp", "transit", "tier1", "tier2"};
};

struct TaxonomyResult {
  std::vector<TaxonomyRecord> records;  // first-seen order, last value wins
  std::size_t duplicates = 0;
  std::vector<std::string> warnings;
};

/// Reads `AS<delim>label` lines (an "AS" prefix on the number is accepted).
TaxonomyResult parse_taxonomy(std::istream& in, const TaxonomyOptions& options = {});

struct CoverageReport {
  std::size_t covered = 0;
  std::size_t uncovered = 0;
  std::size_t unknown_records = 0;  // taxonomy entries for ASes not in the graph
  std::size_t covered_isps = 0;
  std::size_t covered_non_isps = 0;
  std::size_t isps = 0;
  std::size_t non_isps = 0;
  std::size_t inconsistent_nodes = 0;  // labeled non-ISP but has customers or peers
  // covered non-ISPs per covered ISP, when any ISP is covered
  std::optional<double> rho;
  std::vector<std::string> warnings;
};

/// Overwrites node classes where the taxonomy covers them.
CoverageReport apply_taxonomy(AnnotatedGraph& graph, std::span<const TaxonomyRecord> taxonomy);

}  // namespace mpa::ingest
