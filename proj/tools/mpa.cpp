// mpa: generate, analyze and compare annotated AS-level topologies.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "mpa/analytic.hpp"
#include "mpa/config.hpp"
#include "mpa/error.hpp"
#include "mpa/generator.hpp"
#include "mpa/graph_io.hpp"
#include "mpa/ingest.hpp"
#include "mpa/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kData = 2, kThreshold = 3 };

struct ParamFlags {
  mpa::RunSettings flags;
  std::optional<std::string> config;
  std::optional<std::size_t> ensemble;

  void attach(CLI::App& cmd, bool generation) {
    cmd.add_option("--rho", flags.rho, "non-ISP arrivals per ISP arrival");
    cmd.add_option("--nu", flags.nu, "ISP multihoming links per step");
    cmd.add_option("--c", flags.c, "peering links per step");
    cmd.add_option("--m", flags.m, "mean providers per non-ISP");
    cmd.add_option("--mu", flags.mu, "bankruptcy rewirings per step");
    cmd.add_option("--peering-fraction", flags.peering_fraction,
                   "derive c from the fraction of links that are peering");
    cmd.add_option("--config", config, "key/value or JSON settings file")->check(CLI::ExistingFile);
    if (!generation) return;
    cmd.add_option("--target-isps", flags.target_isps, "ISPs to grow");
    cmd.add_option("--target-non-isps", flags.target_non_isps, "non-ISPs to grow");
    cmd.add_option("--seed", flags.seed, "random seed");
    cmd.add_option("--max-resample", flags.max_resample, "redraws before an event is dropped");
    cmd.add_option("--ensemble", ensemble, "number of runs (seeds seed, seed+1, ...)")
        ->check(CLI::PositiveNumber);
  }

  mpa::RunSettings resolve() const {
    mpa::RunSettings s;
    if (config) {
      std::ifstream in(*config);
      if (!in) throw mpa::Error(mpa::ErrorCode::Io, "cannot open " + *config);
      s = mpa::parse_run_settings(in);
    }
    s.merge(flags);
    return s;
  }
};

struct GraphFlags {
  std::optional<std::string> classes;
  std::optional<std::string> taxonomy;
  std::string code_map = "provider-first";
  bool drop_siblings = false;

  void attach(CLI::App& cmd, const std::string& prefix = "") {
    cmd.add_option("--" + prefix + "classes", classes, "class sidecar (JSON)")
        ->check(CLI::ExistingFile);
    cmd.add_option("--" + prefix + "taxonomy", taxonomy, "AS taxonomy file")
        ->check(CLI::ExistingFile);
    if (prefix.empty()) {
      cmd.add_option("--code-map", code_map, "orientation of code -1")
          ->check(CLI::IsMember({"provider-first", "customer-first"}));
      cmd.add_flag("--drop-siblings", drop_siblings, "discard sibling (code 2) records");
    }
  }
};

json params_json(const mpa::MpaParams& p) {
  return {{"rho", p.rho}, {"nu", p.nu}, {"c", p.c}, {"m", p.m}, {"mu", p.mu}};
}

fs::path default_out_dir() {
  if (const char* env = std::getenv("MPA_OUT_DIR"); env && *env) return env;
  return "mpa-out";
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mpa::Error(mpa::ErrorCode::Io, "cannot write " + path.string());
  out << text;
}

json manifest_json(const mpa::GeneratorConfig& cfg, const mpa::GeneratorResult& r) {
  const auto& e = r.events;
  return {{"format", "mpa-run-manifest"},
          {"version", 1},
          {"params", params_json(cfg.params)},
          {"seed", r.seed},
          {"target_isps", cfg.target_isps},
          {"target_non_isps", cfg.target_non_isps},
          {"max_resample", cfg.max_resample},
          {"steps", r.steps},
          {"events",
           {{"isp_arrivals", e.isp_arrivals},
            {"non_isp_arrivals", e.non_isp_arrivals},
            {"non_isp_links", e.non_isp_links},
            {"multihoming_links", e.multihoming_links},
            {"peering_links", e.peering_links},
            {"rewirings", e.rewirings},
            {"aborted_non_isp_links", e.aborted_non_isp_links},
            {"aborted_multihoming", e.aborted_multihoming},
            {"aborted_peering", e.aborted_peering},
            {"aborted_rewirings", e.aborted_rewirings}}},
          {"nodes", r.graph.node_count()},
          {"isps", r.graph.count(mpa::NodeClass::Isp)},
          {"non_isps", r.graph.count(mpa::NodeClass::NonIsp)},
          {"links", r.graph.link_count()},
          {"wall_time_seconds", r.wall_time_seconds}};
}

void write_run(const mpa::GeneratorConfig& cfg, const mpa::GeneratorResult& r, const fs::path& dir) {
  mpa::io::save_graph(r.graph, dir);
  write_file(dir / "manifest.json", manifest_json(cfg, r).dump(2) + "\n");
}

struct Loaded {
  mpa::AnnotatedGraph graph;
  std::vector<std::string> warnings;
};

Loaded load(const std::string& path, const GraphFlags& gf) {
  mpa::ingest::CodeMap map;
  map.orientation = mpa::ingest::parse_orientation(gf.code_map);
  if (gf.drop_siblings) map.siblings = mpa::ingest::SiblingPolicy::Drop;

  std::optional<fs::path> classes;
  if (gf.classes) classes = *gf.classes;
  auto loaded = mpa::io::load_graph(path, classes, map);
  Loaded out{std::move(loaded.ingest.graph), std::move(loaded.ingest.warnings)};

  if (gf.taxonomy) {
    std::ifstream in(*gf.taxonomy);
    if (!in) throw mpa::Error(mpa::ErrorCode::Io, "cannot open " + *gf.taxonomy);
    auto tax = mpa::ingest::parse_taxonomy(in);
    auto cov = mpa::ingest::apply_taxonomy(out.graph, tax.records);
    out.warnings.insert(out.warnings.end(), tax.warnings.begin(), tax.warnings.end());
    out.warnings.insert(out.warnings.end(), cov.warnings.begin(), cov.warnings.end());
  } else if (!loaded.classes_from_sidecar) {
    out.warnings.push_back(path + ": no class sidecar or taxonomy; classes inferred from links");
  }
  return out;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_predict(const ParamFlags& pf) {
  const auto p = pf.resolve().params();
  const auto pred = mpa::analytic::predict(p);
  const json out{{"params", params_json(p)},
                 {"alpha", pred.alpha},
                 {"beta", pred.beta},
                 {"gamma", pred.gamma},
                 {"provider_rate", pred.provider_rate},
                 {"mean_total_degree", pred.mean_total_degree}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_generate(const ParamFlags& pf, const fs::path& out_dir) {
  const auto cfg = pf.resolve().generator_config();
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw mpa::Error(mpa::ErrorCode::Io, "cannot create " + out_dir.string());

  if (!pf.ensemble) {
    const auto r = mpa::run(cfg);
    write_run(cfg, r, out_dir);
    std::cout << "wrote " << r.graph.node_count() << " nodes, " << r.graph.link_count()
              << " links to " << out_dir.string() << "\n";
    return kOk;
  }

  const auto results = mpa::run_ensemble(cfg, *pf.ensemble);
  for (std::size_t i = 0; i < results.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "run-%03zu", i);
    const fs::path dir = out_dir / name;
    fs::create_directories(dir, ec);
    if (ec) throw mpa::Error(mpa::ErrorCode::Io, "cannot create " + dir.string());
    write_run(cfg, results[i], dir);
  }
  std::cout << "wrote " << results.size() << " runs to " << out_dir.string() << "\n";
  return kOk;
}

int cmd_analyze(const std::string& graph, const GraphFlags& gf, const fs::path& out_dir) {
  auto loaded = load(graph, gf);
  print_warnings(loaded.warnings);
  const auto analysis = mpa::report::analyze(loaded.graph);
  mpa::report::write_analysis(analysis, out_dir);
  std::cout << mpa::report::summary_json(analysis).dump(2) << "\n";
  return kOk;
}

int cmd_compare(const std::string& synthetic, const std::string& observed, const GraphFlags& sf,
                const GraphFlags& of, const mpa::report::Thresholds& t, const fs::path& out_dir) {
  auto syn = load(synthetic, sf);
  auto obs = load(observed, of);
  auto report = mpa::report::compare(mpa::report::analyze(syn.graph),
                                     mpa::report::analyze(obs.graph), t);
  report.warnings = syn.warnings;
  report.warnings.insert(report.warnings.end(), obs.warnings.begin(), obs.warnings.end());

  const fs::path manifest = fs::path(synthetic).parent_path() / "manifest.json";
  if (std::ifstream in(manifest); in) {
    try {
      report.synthetic_manifest = json::parse(in);
    } catch (const json::exception&) {
      report.warnings.push_back(manifest.string() + " is not valid JSON; not echoed");
    }
  }

  print_warnings(report.warnings);
  mpa::report::write_compare(report, out_dir);

  json brief = mpa::report::to_json(report);
  brief.erase("metrics");
  std::cout << brief.dump(2) << "\n";
  for (const auto& v : report.violations) std::cerr << "threshold: " << v << "\n";
  return report.passed() ? kOk : kThreshold;
}

int exit_for(const mpa::Error& e) {
  switch (e.code()) {
    case mpa::ErrorCode::InvalidParams:
    case mpa::ErrorCode::InvalidTime:
    case mpa::ErrorCode::UnsupportedRegime:
      return kUsage;
    default:
      return kData;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiclass preferential attachment topology toolkit"};
  app.require_subcommand(1);
  fs::path out_dir = default_out_dir();

  ParamFlags predict_flags;
  auto* predict = app.add_subcommand("predict", "print closed-form predictions as JSON");
  predict_flags.attach(*predict, false);

  ParamFlags gen_flags;
  auto* generate = app.add_subcommand("generate", "grow a topology and write it to --out-dir");
  gen_flags.attach(*generate, true);
  generate->add_option("--out-dir", out_dir, "output directory (default $MPA_OUT_DIR)");

  std::string graph_path;
  GraphFlags analyze_flags;
  auto* analyze = app.add_subcommand("analyze", "compute the metric battery of a graph");
  analyze->add_option("graph", graph_path, "as-rel file")->required()->check(CLI::ExistingFile);
  analyze_flags.attach(*analyze);
  analyze->add_option("--out-dir", out_dir, "output directory (default $MPA_OUT_DIR)");

  std::string synthetic_path, observed_path;
  GraphFlags syn_flags, obs_flags;
  mpa::report::Thresholds thresholds;
  auto* compare = app.add_subcommand("compare", "compare a synthetic graph with an observed one");
  compare->add_option("synthetic", synthetic_path, "synthetic as-rel file")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("observed", observed_path, "observed as-rel file")
      ->required()
      ->check(CLI::ExistingFile);
  obs_flags.attach(*compare);
  compare->add_option("--synthetic-classes", syn_flags.classes, "class sidecar of the synthetic graph")
      ->check(CLI::ExistingFile);
  compare->add_option("--max-dd-delta", thresholds.max_dd_delta, "largest allowed DD exponent gap");
  compare->add_option("--observed-dd-lo", thresholds.observed_dd_lo, "lower bound on observed DD");
  compare->add_option("--observed-dd-hi", thresholds.observed_dd_hi, "upper bound on observed DD");
  compare->add_option("--out-dir", out_dir, "output directory (default $MPA_OUT_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*predict) return cmd_predict(predict_flags);
    if (*generate) return cmd_generate(gen_flags, out_dir);
    if (*analyze) return cmd_analyze(graph_path, analyze_flags, out_dir);
    return cmd_compare(synthetic_path, observed_path, syn_flags, obs_flags, thresholds, out_dir);
  } catch (const mpa::Error& e) {
    std::cerr << "error (" << mpa::to_string(e.code()) << "): " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
}
