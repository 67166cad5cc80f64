#pragma once

namespace mpa {

/// The five model rates, all per unit time (one ISP arrival).
struct MpaParams {
  double rho = 0.0;  // non-ISP arrivals
  double nu = 0.0;   // ISP multihoming links
  double c = 0.0;    // peering links
  double m = 1.0;    // mean providers per non-ISP
  double mu = 0.0;   // bankruptcy events

  friend bool operator==(const MpaParams&, const MpaParams&) = default;
};

/// Throws Error(InvalidParams) unless every rate is finite, non-negative,
/// m >= 1 and mu < 1.
void check_params(const MpaParams& params);

/// Measured rates used for the reference reproduction.
MpaParams measured_internet_params();

/// Classic preferential attachment: one node, one link per unit time.
inline MpaParams classic_pa_params() { return {}; }

/// Two-class model: only ISPs and single-homed non-ISPs.
inline MpaParams two_class_params(double rho) { return {rho, 0.0, 0.0, 1.0, 0.0}; }

}  // namespace mpa
