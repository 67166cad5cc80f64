#pragma once

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mpa/graph.hpp"
#include "mpa/powerlaw.hpp"
#include "mpa/series.hpp"

namespace mpa::report {

struct NamedSeries {
  std::string metric;  // dd, ad, add, jdd, annd, clustering
  std::string kind;    // all, customers, providers, peers, c2p, p2p
  std::variant<CcdfSeries, BinnedSeries> data;

  std::string name() const { return metric + "." + kind; }
};

struct NamedFit {
  std::string name;
  std::optional<PowerLawFit> fit;
  std::string error;  // why the fit is missing
};

struct Analysis {
  std::size_t nodes = 0;
  std::size_t links = 0;
  std::size_t isps = 0;
  std::size_t non_isps = 0;
  std::size_t c2p_links = 0;
  std::size_t p2p_links = 0;
  double mean_degree = 0.0;
  std::vector<NamedSeries> series;
  std::vector<NamedFit> fits;

  const NamedSeries* find_series(const std::string& name) const;
  const NamedFit* find_fit(const std::string& name) const;
};

/// Series names produced by `analyze`, in output order.
const std::vector<std::string>& battery();

/// Names of the series that receive a power-law fit.
const std::vector<std::string>& fitted();

/// Runs the whole metric battery. Series whose links are absent (for
/// example jdd.p2p on a tree) come back empty.
Analysis analyze(const AnnotatedGraph& graph, const FitOptions& fit_options = {});

/// CSV with a `key,value[,count]` header; numbers printed with %.10g.
std::string to_csv(const NamedSeries& series);

nlohmann::json to_json(const NamedSeries& series);
nlohmann::json to_json(const PowerLawFit& fit);
nlohmann::json summary_json(const Analysis& analysis);

/// Writes `<metric>.<kind>.csv` for every series plus `summary.json`.
void write_analysis(const Analysis& analysis, const std::filesystem::path& dir);

struct Thresholds {
  double max_dd_delta = 0.2;
  double observed_dd_lo = 2.0;
  double observed_dd_hi = 2.3;
};

struct FitDelta {
  std::string name;
  std::optional<double> synthetic;
  std::optional<double> observed;
  std::optional<double> delta;  // synthetic - observed
};

struct CompareReport {
  Analysis synthetic;
  Analysis observed;
  std::vector<FitDelta> deltas;
  double mean_degree_delta = 0.0;
  Thresholds thresholds;
  nlohmann::json synthetic_manifest;  // parameters and seed, if known
  std::vector<std::string> warnings;
  std::vector<std::string> violations;

  bool passed() const noexcept { return violations.empty(); }
};

CompareReport compare(Analysis synthetic, Analysis observed, const Thresholds& thresholds = {});

nlohmann::json to_json(const CompareReport& report);

/// Writes compare.json and the two analysis bundles under synthetic/ and
/// observed/.
void write_compare(const CompareReport& report, const std::filesystem::path& dir);

}  // namespace mpa::report
