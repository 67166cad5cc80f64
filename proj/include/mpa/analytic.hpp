#pragma once

#include "mpa/params.hpp"

/// Closed-form predictions of the multiclass preferential attachment model.
/// All functions are pure and validate their inputs.
namespace mpa::analytic {

struct Prediction {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double provider_rate = 0.0;
  double mean_total_degree = 0.0;
};

/// Growth exponent of the mean degree trajectory.
double alpha(const MpaParams& params);

/// Share of loose connections that are peering ends.
double beta(const MpaParams& params);

/// Degree distribution exponent, 2 + (1-mu)/(1 + 2nu + m rho + 2c + mu).
double gamma(const MpaParams& params);

/// Exponent of the two-class model: 2 + 1/(1+rho). Accepts +infinity.
double two_class_exponent(double rho);

/// (s/t)^-((1+rho)/(2+rho)).
double two_class_trajectory(double s, double t, double rho);

/// Expected degree at time t of an ISP born at s: (s/t)^-alpha + mu/alpha.
/// Requires 0 < s <= t.
double mean_degree_trajectory(double s, double t, const MpaParams& params);

/// Expected number of peers at time t of an ISP born at s. Only derived for
/// mu = 0; other regimes raise UnsupportedRegime.
double peer_trajectory(double s, double t, const MpaParams& params);

/// Predicted fraction of ISPs with at least p providers beyond the first.
double provider_ccdf(double p, double nu);

/// Mean ISP provider count, 1 + nu.
double mean_provider_count(double nu);

/// Multihoming rate implied by the slope of a semi-log provider CCDF.
double multihoming_rate_from_slope(double log_ccdf_slope);

/// Peering rate c for which peering links make up `peering_fraction` of all
/// links, given customer links arriving at 1 + nu + m rho.
double derive_peering_rate(double peering_fraction, double nu, double m, double rho);

Prediction predict(const MpaParams& params);

}  // namespace mpa::analytic
