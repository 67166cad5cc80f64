#include "mpa/config.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>
#include <string_view>

#include "mpa/analytic.hpp"
#include "mpa/error.hpp"

namespace mpa {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n\"'");
  const auto e = s.find_last_not_of(" \t\r\n\"',");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw Error(ErrorCode::InvalidParams, "config key '" + key + "' has bad value '" + value + "'");
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) bad_value(key, v);
  return out;
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) bad_value(key, v);
  return out;
}

void assign(RunSettings& s, const std::string& key, const std::string& value) {
  if (key == "rho") s.rho = to_double(key, value);
  else if (key == "nu") s.nu = to_double(key, value);
  else if (key == "c") s.c = to_double(key, value);
  else if (key == "m" || key == "m_nonisp") s.m = to_double(key, value);
  else if (key == "mu") s.mu = to_double(key, value);
  else if (key == "peering_fraction") s.peering_fraction = to_double(key, value);
  else if (key == "target_isps") s.target_isps = to_uint(key, value);
  else if (key == "target_non_isps") s.target_non_isps = to_uint(key, value);
  else if (key == "seed") s.seed = to_uint(key, value);
  else if (key == "max_resample") s.max_resample = static_cast<unsigned>(to_uint(key, value));
  else throw Error(ErrorCode::InvalidParams, "unknown config key '" + key + "'");
}

}  // namespace

void RunSettings::merge(const RunSettings& o) {
  auto take = [](auto& mine, const auto& theirs) {
    if (theirs) mine = theirs;
  };
  take(rho, o.rho);
  take(nu, o.nu);
  take(c, o.c);
  take(m, o.m);
  take(mu, o.mu);
  take(peering_fraction, o.peering_fraction);
  take(target_isps, o.target_isps);
  take(target_non_isps, o.target_non_isps);
  take(seed, o.seed);
  take(max_resample, o.max_resample);
}

MpaParams RunSettings::params(const MpaParams& base) const {
  MpaParams p = base;
  if (rho) p.rho = *rho;
  if (nu) p.nu = *nu;
  if (m) p.m = *m;
  if (mu) p.mu = *mu;
  if (peering_fraction && c) {
    throw Error(ErrorCode::InvalidParams, "give either c or peering_fraction, not both");
  }
  if (c) p.c = *c;
  if (peering_fraction) p.c = analytic::derive_peering_rate(*peering_fraction, p.nu, p.m, p.rho);
  check_params(p);
  return p;
}

GeneratorConfig RunSettings::generator_config() const {
  GeneratorConfig cfg;
  cfg.params = params();
  if (target_isps) cfg.target_isps = *target_isps;
  if (target_non_isps) cfg.target_non_isps = *target_non_isps;
  if (seed) cfg.seed = *seed;
  if (max_resample) cfg.max_resample = *max_resample;
  check_config(cfg);
  return cfg;
}

RunSettings parse_run_settings(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  RunSettings s;

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidParams, std::string("config: ") + e.what());
    }
    for (const auto& [key, value] : doc.items()) {
      if (!value.is_number()) bad_value(key, value.dump());
      assign(s, key, value.dump());
    }
    return s;
  }

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto sep = line.find_first_of("=:");
    if (sep == std::string::npos) {
      throw Error(ErrorCode::InvalidParams, "config line without '=' or ':': " + line);
    }
    assign(s, trim(line.substr(0, sep)), trim(line.substr(sep + 1)));
  }
  return s;
}

}  // namespace mpa
