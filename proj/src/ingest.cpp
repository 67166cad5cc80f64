#include "mpa/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string_view>
#include <unordered_map>

#include "mpa/error.hpp"

namespace mpa::ingest {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char delim) {
  std::vector<std::string_view> out;
  if (delim == ' ') {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) out.push_back(line.substr(i, j - i));
      i = j;
    }
    return out;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == delim) {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_as(std::string_view s, AsNumber& out) {
  s = trim(s);
  if (s.size() > 2 && (s[0] == 'A' || s[0] == 'a') && (s[1] == 'S' || s[1] == 's')) s.remove_prefix(2);
  return parse_number(s, out);
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": " + why);
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

// Canonical relationship of an unordered pair after applying the code map.
struct Relation {
  AsNumber a;
  AsNumber b;
  LinkKind kind;
  AsNumber customer;  // meaningful for C2P only
  std::size_t line;

  bool same_as(const Relation& o) const {
    if (kind != o.kind) return false;
    return kind == LinkKind::P2P || customer == o.customer;
  }
};

std::uint64_t mix(AsNumber a, AsNumber b) {
  if (a > b) std::swap(a, b);
  return a * 0x9E3779B97F4A7C15ull ^ (b + 0x7F4A7C159E3779B9ull + (a << 6) + (a >> 2));
}

}  // namespace

CodeOrientation parse_orientation(const std::string& text) {
  if (text == "provider-first") return CodeOrientation::ProviderFirst;
  if (text == "customer-first") return CodeOrientation::CustomerFirst;
  throw Error(ErrorCode::InvalidParams,
              "code map must be provider-first or customer-first, got '" + text + "'");
}

IngestResult parse_as_rel(std::istream& in, const CodeMap& map, std::span<const SeedNode> seeds) {
  IngestResult result;
  std::vector<Relation> relations;
  std::unordered_multimap<std::uint64_t, std::size_t> by_pair;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto fields = split(line, '|');
    if (fields.size() < 3) malformed(line_no, "expected A|B|code");
    AsRelRecord rec;
    if (!parse_as(fields[0], rec.as_a) || !parse_as(fields[1], rec.as_b)) {
      malformed(line_no, "bad AS number");
    }
    if (!parse_number(fields[2], rec.code) || rec.code < -1 || rec.code > 2) {
      malformed(line_no, "relationship code must be -1, 0, 1 or 2");
    }
    if (rec.as_a == rec.as_b) malformed(line_no, "self-loop on AS " + std::to_string(rec.as_a));
    ++result.records;

    Relation rel{rec.as_a, rec.as_b, LinkKind::P2P, 0, line_no};
    if (rec.code == 2) {
      ++result.sibling_records;
      if (map.siblings == SiblingPolicy::Drop) {
        ++result.dropped_siblings;
        continue;
      }
    } else if (rec.code != 0) {
      const bool first_provides = (rec.code == -1) == (map.orientation == CodeOrientation::ProviderFirst);
      rel.kind = LinkKind::C2P;
      rel.customer = first_provides ? rec.as_b : rec.as_a;
    }

    const auto key = mix(rel.a, rel.b);
    bool duplicate = false;
    auto [lo, hi] = by_pair.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      const auto& prev = relations[it->second];
      const bool same_pair = (prev.a == rel.a && prev.b == rel.b) || (prev.a == rel.b && prev.b == rel.a);
      if (!same_pair) continue;
      if (!prev.same_as(rel)) {
        throw Error(ErrorCode::ConflictingDuplicate,
                    "line " + std::to_string(line_no) + ": pair " + std::to_string(rel.a) + "|" +
                        std::to_string(rel.b) + " contradicts line " + std::to_string(prev.line));
      }
      duplicate = true;
      break;
    }
    if (duplicate) {
      ++result.duplicate_records;
      continue;
    }
    by_pair.emplace(key, relations.size());
    relations.push_back(rel);
  }
  if (result.duplicate_records > 0) {
    result.warnings.push_back(std::to_string(result.duplicate_records) +
                              " duplicate relationship records ignored (first wins)");
  }

  // Node order: seeds first, then first appearance.
  std::unordered_map<AsNumber, std::size_t> index;
  std::vector<AsNumber> order;
  std::vector<bool> transit;  // has customers or peers
  auto intern = [&](AsNumber as) {
    auto [it, inserted] = index.emplace(as, order.size());
    if (inserted) {
      order.push_back(as);
      transit.push_back(false);
    }
    return it->second;
  };
  for (const auto& s : seeds) {
    if (index.contains(s.as_number)) {
      throw Error(ErrorCode::MalformedLine, "seed list repeats AS " + std::to_string(s.as_number));
    }
    intern(s.as_number);
  }
  for (const auto& r : relations) {
    const auto ia = intern(r.a);
    const auto ib = intern(r.b);
    if (r.kind == LinkKind::P2P) {
      transit[ia] = transit[ib] = true;
    } else {
      transit[r.customer == r.a ? ib : ia] = true;
    }
  }

  // Build with inferred classes (which always satisfy the class rules), then
  // apply seeded classes on top.
  auto& g = result.graph;
  for (std::size_t i = 0; i < order.size(); ++i) {
    g.add_node(transit[i] ? NodeClass::Isp : NodeClass::NonIsp, order[i]);
  }
  for (const auto& r : relations) {
    const auto a = static_cast<NodeId>(index.at(r.a));
    const auto b = static_cast<NodeId>(index.at(r.b));
    if (r.kind == LinkKind::P2P) {
      g.add_p2p(a, b);
    } else {
      const auto customer = static_cast<NodeId>(index.at(r.customer));
      g.add_c2p(customer, customer == a ? b : a);
    }
  }
  for (std::size_t i = 0; i < seeds.size(); ++i) g.set_class(static_cast<NodeId>(i), seeds[i].cls);
  if (!seeds.empty()) {
    result.class_inconsistencies = count_class_violations(g);
    if (result.class_inconsistencies > 0) {
      result.warnings.push_back(std::to_string(result.class_inconsistencies) +
                                " links contradict the supplied node classes");
    }
  }
  return result;
}

TaxonomyResult parse_taxonomy(std::istream& in, const TaxonomyOptions& options) {
  TaxonomyResult result;
  std::unordered_map<AsNumber, std::size_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto fields = split(line, options.delimiter);
    if (fields.size() < 2 || trim(fields[1]).empty()) malformed(line_no, "expected AS and class label");
    TaxonomyRecord rec;
    if (!parse_as(fields[0], rec.as_number)) malformed(line_no, "bad AS number");
    rec.label = std::string(trim(fields[1]));
    std::string lower = rec.label;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    rec.is_isp = options.isp_labels.contains(lower);

    auto [it, inserted] = seen.emplace(rec.as_number, result.records.size());
    if (inserted) {
      result.records.push_back(std::move(rec));
    } else {
      ++result.duplicates;
      result.records[it->second] = std::move(rec);
    }
  }
  if (result.duplicates > 0) {
    result.warnings.push_back(std::to_string(result.duplicates) +
                              " repeated AS numbers in taxonomy (last wins)");
  }
  return result;
}

CoverageReport apply_taxonomy(AnnotatedGraph& graph, std::span<const TaxonomyRecord> taxonomy) {
  CoverageReport report;
  std::vector<bool> covered(graph.node_count(), false);
  for (const auto& rec : taxonomy) {
    const auto node = graph.find_label(rec.as_number);
    if (!node) {
      ++report.unknown_records;
      continue;
    }
    graph.set_class(*node, rec.is_isp ? NodeClass::Isp : NodeClass::NonIsp);
    covered[*node] = true;
  }
  for (const auto& n : graph.nodes()) {
    const bool isp = n.cls == NodeClass::Isp;
    if (covered[n.id]) {
      ++report.covered;
      ++(isp ? report.covered_isps : report.covered_non_isps);
    } else {
      ++report.uncovered;
    }
    ++(isp ? report.isps : report.non_isps);
    const auto d = graph.degree_vector(n.id);
    if (!isp && (d.customers > 0 || d.peers > 0)) ++report.inconsistent_nodes;
  }
  if (report.covered_isps > 0) {
    report.rho = static_cast<double>(report.covered_non_isps) / static_cast<double>(report.covered_isps);
  }
  if (report.inconsistent_nodes > 0) {
    report.warnings.push_back(std::to_string(report.inconsistent_nodes) +
                              " nodes labeled non-ISP have customers or peers; kept as labeled");
  }
  return report;
}

}  // namespace mpa::ingest
