#include "mpa/graph_io.hpp"

#include <fstream>
#include <json.hpp>
#include <string>

#include "mpa/error.hpp"

namespace mpa::io {

void write_as_rel(const AnnotatedGraph& g, std::ostream& out) {
  out << "# annotated AS graph: " << g.node_count() << " nodes, " << g.link_count() << " links\n"
      << "# format: <AS1>|<AS2>|<relationship>\n"
      << "# -1: AS1 is a provider of AS2\n"
      << "#  0: AS1 and AS2 are peers\n";
  for (const auto& l : g.links()) {
    if (l.kind == LinkKind::C2P) {
      out << g.node(l.provider()).label << '|' << g.node(l.customer()).label << "|-1\n";
    } else {
      out << g.node(l.a).label << '|' << g.node(l.b).label << "|0\n";
    }
  }
}

void write_classes_json(const AnnotatedGraph& g, std::ostream& out) {
  out << "{\n  \"format\": \"mpa-node-classes\",\n  \"version\": 1,\n  \"nodes\": [";
  const auto nodes = g.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"as\": " << n.label << ", \"class\": \"" << to_string(n.cls)
        << "\", \"arrival_index\": " << n.arrival_index << "}";
  }
  out << (nodes.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

std::vector<ingest::SeedNode> read_classes_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedLine, std::string("class sidecar: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != "mpa-node-classes" || !doc.contains("nodes") ||
      !doc["nodes"].is_array()) {
    throw Error(ErrorCode::MalformedLine, "class sidecar: not an mpa-node-classes document");
  }
  std::vector<ingest::SeedNode> seeds;
  std::size_t expected = 0;
  for (const auto& n : doc["nodes"]) {
    try {
      const auto cls = n.at("class").get<std::string>();
      if (cls != "isp" && cls != "non-isp") {
        throw Error(ErrorCode::MalformedLine, "class sidecar: unknown class '" + cls + "'");
      }
      if (n.at("arrival_index").get<std::size_t>() != expected) {
        throw Error(ErrorCode::MalformedLine,
                    "class sidecar: node " + std::to_string(expected) + " is out of arrival order");
      }
      seeds.push_back({n.at("as").get<AsNumber>(), cls == "isp" ? NodeClass::Isp : NodeClass::NonIsp});
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::MalformedLine,
                  "class sidecar node " + std::to_string(expected) + ": " + e.what());
    }
    ++expected;
  }
  return seeds;
}

std::filesystem::path sidecar_path(const std::filesystem::path& as_rel) {
  const std::string s = as_rel.string();
  const std::string suffix = ".as-rel.txt";
  if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return s.substr(0, s.size() - suffix.size()) + ".classes.json";
  }
  return s + ".classes.json";
}

LoadedGraph load_graph(const std::filesystem::path& as_rel,
                       const std::optional<std::filesystem::path>& classes,
                       const ingest::CodeMap& map) {
  std::ifstream rel(as_rel);
  if (!rel) throw Error(ErrorCode::Io, "cannot open " + as_rel.string());

  std::optional<std::filesystem::path> side = classes;
  if (!side) {
    auto guess = sidecar_path(as_rel);
    if (std::filesystem::exists(guess)) side = guess;
  }
  LoadedGraph out;
  std::vector<ingest::SeedNode> seeds;
  if (side) {
    std::ifstream in(*side);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + side->string());
    seeds = read_classes_json(in);
    out.classes_from_sidecar = true;
  }
  out.ingest = ingest::parse_as_rel(rel, map, seeds);
  return out;
}

void save_graph(const AnnotatedGraph& graph, const std::filesystem::path& dir, const std::string& stem) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / (stem + ".as-rel.txt"), std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write into " + dir.string());
    write_as_rel(graph, out);
  }
  std::ofstream out(dir / (stem + ".classes.json"), std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write into " + dir.string());
  write_classes_json(graph, out);
}

}  // namespace mpa::io
