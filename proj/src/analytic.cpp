#include "mpa/analytic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mpa/error.hpp"

namespace mpa {

void check_params(const MpaParams& p) {
  auto bad = [](const char* name, double v) {
    throw Error(ErrorCode::InvalidParams, std::string(name) + " = " + std::to_string(v));
  };
  for (auto [name, v] : {std::pair{"rho", p.rho}, {"nu", p.nu}, {"c", p.c}, {"m", p.m}, {"mu", p.mu}}) {
    if (!std::isfinite(v) || v < 0.0) bad(name, v);
  }
  if (p.m < 1.0) bad("m", p.m);
  if (p.mu >= 1.0) bad("mu", p.mu);
}

MpaParams measured_internet_params() { return {7.0 / 3.0, 1.0, 0.704, 1.86, 0.0}; }

}  // namespace mpa

namespace mpa::analytic {

namespace {

// Total rate at which ISP degree accumulates, absent bankruptcy.
double degree_rate(const MpaParams& p) { return 2.0 + 2.0 * p.nu + p.m * p.rho + 2.0 * p.c; }

void check_times(double s, double t) {
  if (!(s > 0.0) || !(s <= t) || !std::isfinite(t)) {
    throw Error(ErrorCode::InvalidTime, "need 0 < s <= t, got s=" + std::to_string(s) +
                                            " t=" + std::to_string(t));
  }
}

}  // namespace

double alpha(const MpaParams& p) {
  check_params(p);
  return (1.0 + 2.0 * p.nu + p.m * p.rho + 2.0 * p.c + p.m * p.mu) / degree_rate(p);
}

double beta(const MpaParams& p) {
  check_params(p);
  return 2.0 * p.c / degree_rate(p);
}

double gamma(const MpaParams& p) {
  check_params(p);
  return 2.0 + (1.0 - p.mu) / (1.0 + 2.0 * p.nu + p.m * p.rho + 2.0 * p.c + p.mu);
}

double two_class_exponent(double rho) {
  if (std::isnan(rho) || rho < 0.0) {
    throw Error(ErrorCode::InvalidParams, "rho = " + std::to_string(rho));
  }
  if (std::isinf(rho)) return 2.0;
  return 2.0 + 1.0 / (1.0 + rho);
}

double two_class_trajectory(double s, double t, double rho) {
  check_params(two_class_params(rho));
  check_times(s, t);
  return std::pow(s / t, -(1.0 + rho) / (2.0 + rho));
}

double mean_degree_trajectory(double s, double t, const MpaParams& p) {
  check_times(s, t);
  const double a = alpha(p);
  return std::pow(s / t, -a) + p.mu / a;
}

double peer_trajectory(double s, double t, const MpaParams& p) {
  check_times(s, t);
  check_params(p);
  if (p.mu != 0.0) {
    throw Error(ErrorCode::UnsupportedRegime, "peer trajectory is only derived for mu = 0");
  }
  const double a = alpha(p);
  return beta(p) / a * std::pow(s / t, -a);
}

double provider_ccdf(double p, double nu) {
  if (!(p >= 0.0) || !(nu > 0.0) || !std::isfinite(nu)) {
    throw Error(ErrorCode::InvalidParams,
                "need p >= 0 and nu > 0, got p=" + std::to_string(p) + " nu=" + std::to_string(nu));
  }
  return std::exp(-p / nu);
}

double mean_provider_count(double nu) {
  if (!(nu >= 0.0)) throw Error(ErrorCode::InvalidParams, "nu = " + std::to_string(nu));
  return 1.0 + nu;
}

double multihoming_rate_from_slope(double slope) {
  if (!(slope < 0.0)) {
    throw Error(ErrorCode::InvalidParams, "log-CCDF slope must be negative");
  }
  return -1.0 / slope;
}

double derive_peering_rate(double f, double nu, double m, double rho) {
  if (!(f >= 0.0) || !(f < 1.0)) {
    throw Error(ErrorCode::InvalidParams, "peering fraction = " + std::to_string(f));
  }
  check_params(MpaParams{rho, nu, 0.0, m, 0.0});
  return f * (1.0 + nu + m * rho) / (1.0 - f);
}

Prediction predict(const MpaParams& p) {
  check_params(p);
  Prediction out;
  out.alpha = alpha(p);
  out.beta = beta(p);
  out.gamma = gamma(p);
  out.provider_rate = p.nu;
  out.mean_total_degree = 2.0 * (1.0 + p.nu + p.c + p.m * p.rho) / (1.0 + p.rho);
  return out;
}

}  // namespace mpa::analytic
