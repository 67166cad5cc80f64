#include "mpa/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "mpa/error.hpp"
#include "mpa/metrics.hpp"

namespace mpa::report {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// JSON numbers must be finite; NaN never appears in a well-formed series but
// a fit on pathological data could produce inf.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

BinnedSeries jdd_or_empty(const AnnotatedGraph& g, LinkKind kind) {
  try {
    return metrics::jdd_avg_neighbor(g, kind, true);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSuchLinks) throw;
    return {};
  }
}

NamedFit fit_named(std::string name, std::span<const std::uint32_t> samples,
                   const FitOptions& options) {
  NamedFit out{std::move(name), std::nullopt, {}};
  try {
    out.fit = fit_power_law(samples, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientTail) throw;
    out.error = e.what();
  }
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace

const NamedSeries* Analysis::find_series(const std::string& name) const {
  for (const auto& s : series) {
    if (s.name() == name) return &s;
  }
  return nullptr;
}

const NamedFit* Analysis::find_fit(const std::string& name) const {
  for (const auto& f : fits) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const std::vector<std::string>& battery() {
  static const std::vector<std::string> names{
      "dd.all",      "ad.customers", "ad.providers", "ad.peers",  "add.customers",
      "add.peers",   "jdd.c2p",      "jdd.p2p",      "annd.all",  "clustering.all"};
  return names;
}

const std::vector<std::string>& fitted() {
  static const std::vector<std::string> names{"dd.all", "ad.customers", "ad.peers"};
  return names;
}

Analysis analyze(const AnnotatedGraph& g, const FitOptions& fit_options) {
  if (g.node_count() == 0) throw Error(ErrorCode::EmptyGraph, "cannot analyze an empty graph");
  using metrics::DegreeType;

  Analysis a;
  a.nodes = g.node_count();
  a.links = g.link_count();
  a.isps = g.count(NodeClass::Isp);
  a.non_isps = g.count(NodeClass::NonIsp);
  a.c2p_links = g.count(LinkKind::C2P);
  a.p2p_links = g.count(LinkKind::P2P);
  a.mean_degree = metrics::mean_degree(g);

  a.series.push_back({"dd", "all", metrics::degree_ccdf(g)});
  for (auto t : {DegreeType::Customers, DegreeType::Providers, DegreeType::Peers}) {
    a.series.push_back({"ad", metrics::to_string(t), metrics::annotated_ccdf(g, t)});
  }
  for (auto t : {DegreeType::Customers, DegreeType::Peers}) {
    a.series.push_back({"add", metrics::to_string(t), metrics::add_binned(g, t)});
  }
  a.series.push_back({"jdd", "c2p", jdd_or_empty(g, LinkKind::C2P)});
  a.series.push_back({"jdd", "p2p", jdd_or_empty(g, LinkKind::P2P)});
  a.series.push_back({"annd", "all", metrics::avg_neighbor_degree(g)});
  a.series.push_back({"clustering", "all", metrics::clustering_by_degree(g)});

  const auto all = metrics::degrees(g);
  const auto customers = metrics::degrees(g, DegreeType::Customers, NodeClass::Isp);
  const auto peers = metrics::degrees(g, DegreeType::Peers, NodeClass::Isp);
  a.fits.push_back(fit_named("dd.all", all, fit_options));
  a.fits.push_back(fit_named("ad.customers", customers, fit_options));
  a.fits.push_back(fit_named("ad.peers", peers, fit_options));
  return a;
}

std::string to_csv(const NamedSeries& s) {
  std::string out;
  if (const auto* ccdf = std::get_if<CcdfSeries>(&s.data)) {
    out = "key,value\n";
    for (const auto& p : ccdf->points) out += fmt(p.value) + "," + fmt(p.fraction) + "\n";
  } else {
    out = "key,value,count\n";
    for (const auto& p : std::get<BinnedSeries>(s.data).points) {
      out += fmt(p.key) + "," + fmt(p.mean) + "," + std::to_string(p.count) + "\n";
    }
  }
  return out;
}

json to_json(const NamedSeries& s) {
  json j{{"metric", s.metric}, {"kind", s.kind}};
  json points = json::array();
  if (const auto* ccdf = std::get_if<CcdfSeries>(&s.data)) {
    j["type"] = "ccdf";
    j["population"] = ccdf->population;
    for (const auto& p : ccdf->points) points.push_back({{"key", p.value}, {"value", p.fraction}});
  } else {
    j["type"] = "binned";
    for (const auto& p : std::get<BinnedSeries>(s.data).points) {
      points.push_back({{"key", p.key}, {"value", num(p.mean)}, {"count", p.count}});
    }
  }
  j["points"] = std::move(points);
  return j;
}

json to_json(const PowerLawFit& f) {
  return {{"gamma_hat", num(f.gamma_hat)},
          {"k_min", f.k_min},
          {"n_tail", f.n_tail},
          {"method", to_string(f.method)},
          {"ks_distance", num(f.ks_distance)}};
}

json summary_json(const Analysis& a) {
  json fits = json::object();
  for (const auto& f : a.fits) {
    fits[f.name] = f.fit ? to_json(*f.fit) : json(nullptr);
  }
  json files = json::array();
  for (const auto& s : a.series) files.push_back(s.name() + ".csv");
  return {{"nodes", a.nodes},
          {"links", a.links},
          {"isps", a.isps},
          {"non_isps", a.non_isps},
          {"c2p_links", a.c2p_links},
          {"p2p_links", a.p2p_links},
          {"mean_degree", num(a.mean_degree)},
          {"fits", std::move(fits)},
          {"series", std::move(files)}};
}

void write_analysis(const Analysis& a, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
  for (const auto& s : a.series) write_text(dir / (s.name() + ".csv"), to_csv(s));
  write_text(dir / "summary.json", summary_json(a).dump(2) + "\n");
}

CompareReport compare(Analysis synthetic, Analysis observed, const Thresholds& t) {
  CompareReport r;
  r.thresholds = t;
  r.mean_degree_delta = synthetic.mean_degree - observed.mean_degree;

  for (const auto& name : fitted()) {
    FitDelta d{name, {}, {}, {}};
    if (const auto* f = synthetic.find_fit(name); f && f->fit) d.synthetic = f->fit->gamma_hat;
    if (const auto* f = observed.find_fit(name); f && f->fit) d.observed = f->fit->gamma_hat;
    if (d.synthetic && d.observed) d.delta = *d.synthetic - *d.observed;
    r.deltas.push_back(d);
  }

  const FitDelta& dd = r.deltas.front();
  if (!dd.delta) {
    r.violations.push_back("degree distribution fit unavailable for one of the graphs");
  } else if (std::abs(*dd.delta) > t.max_dd_delta) {
    r.violations.push_back("DD exponent delta " + fmt(*dd.delta) + " exceeds " +
                           fmt(t.max_dd_delta));
  }
  if (dd.observed && (*dd.observed < t.observed_dd_lo || *dd.observed > t.observed_dd_hi)) {
    r.violations.push_back("observed DD exponent " + fmt(*dd.observed) + " outside [" +
                           fmt(t.observed_dd_lo) + ", " + fmt(t.observed_dd_hi) + "]");
  }

  r.synthetic = std::move(synthetic);
  r.observed = std::move(observed);
  return r;
}

json to_json(const CompareReport& r) {
  json deltas = json::object();
  for (const auto& d : r.deltas) {
    auto opt = [](const std::optional<double>& v) { return v ? num(*v) : json(nullptr); };
    deltas[d.name] = {
        {"synthetic", opt(d.synthetic)}, {"observed", opt(d.observed)}, {"delta", opt(d.delta)}};
  }
  json metrics = json::object();
  for (const auto& name : battery()) {
    const auto* s = r.synthetic.find_series(name);
    const auto* o = r.observed.find_series(name);
    metrics[name] = {{"synthetic", s ? to_json(*s) : json(nullptr)},
                     {"observed", o ? to_json(*o) : json(nullptr)}};
  }
  return {{"passed", r.passed()},
          {"violations", r.violations},
          {"warnings", r.warnings},
          {"thresholds",
           {{"max_dd_delta", r.thresholds.max_dd_delta},
            {"observed_dd_lo", r.thresholds.observed_dd_lo},
            {"observed_dd_hi", r.thresholds.observed_dd_hi}}},
          {"exponents", std::move(deltas)},
          {"mean_degree",
           {{"synthetic", num(r.synthetic.mean_degree)},
            {"observed", num(r.observed.mean_degree)},
            {"delta", num(r.mean_degree_delta)}}},
          {"synthetic_manifest", r.synthetic_manifest},
          {"metrics", std::move(metrics)}};
}

void write_compare(const CompareReport& r, const fs::path& dir) {
  write_analysis(r.synthetic, dir / "synthetic");
  write_analysis(r.observed, dir / "observed");
  write_text(dir / "compare.json", to_json(r).dump(2) + "\n");
}

}  // namespace mpa::report
