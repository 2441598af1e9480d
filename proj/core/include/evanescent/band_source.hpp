#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "evanescent/core_model.hpp"

namespace evanescent {

// Source spectrum cut to the box [omega0 - dw, omega0 + dw], all of it below the cutoff.
struct BandParams {
  double omega0 = 0.5;
  double delta_omega = 0.1;
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  double kappa0 = 0.0;
  double kappa_plus = 0.0;
  double kappa_minus = 0.0;

  static BandParams make(double omega0, double delta_omega);
  SourceParams source() const { return SourceParams::make_band(omega0, delta_omega); }
};

// psi(0, t); one half at t = 0.
cplx band_source_signal(const BandParams& band, double t);

enum class Endpoint { lower, upper };

struct PathPoint {
  cplx y;      // point in the y = Omega/Omega_s plane
  cplx q;      // the matching square-root sheet, q^2 = y
  double u;    // exponent drop divided by lambda
};

// Steepest-descent path leaving the endpoint y = z < 0, sampled with steps that
// shrink where the curve bends, until the arc length reaches arc_limit.
std::vector<PathPoint> endpoint_path(double z, int sign_t, double arc_limit,
                                     double max_turn = 0.05);

// Starting angle of that path.
double endpoint_angle(double z, int sign_t);

struct EndpointContribution {
  Endpoint endpoint = Endpoint::lower;
  double z = 0.0;
  double lambda = 0.0;
  cplx value_numeric;
  cplx value_leading;
  // Integrals without the common prefactor; their ratio gives the relative correction.
  cplx scaled_numeric;
  cplx scaled_leading;
  double t_crit = 0.0;
  double theta_z = 0.0;
  bool near_pole = false;
  bool converged = true;

  double relative_correction() const;
};

EndpointContribution endpoint_contribution(const BandParams& band, Endpoint endpoint, double x,
                                           double t);

struct BandWave {
  cplx psi;
  cplx d_minus;
  cplx d_plus;
  cplx residue;
  bool used_oracle = false;
  bool near_pole = false;
};

BandWave psi_band_detailed(const BandParams& band, double x, double t);
cplx psi_band(const BandParams& band, double x, double t);

struct BandCharacteristics {
  double x = 0.0;
  double tau = 0.0;
  double t_plus = 0.0;
  double t_minus = 0.0;
  std::optional<double> t_tr_exact;  // empty when the radicand is negative
  double radicand = 0.0;
  double t_tr_approx = 0.0;
  // Ratios of the two sides of 2 pi/tau << dw << |Omega0|.
  double fast_onset_ratio = 0.0;
  double evanescent_ratio = 0.0;
  bool fast_onset_ok = false;
  bool evanescent_ok = false;
  double kappa0 = 0.0;
  double kappa_plus = 0.0;
  double delta_omega = 0.0;

  double r_prime(double t) const;
  double v_tr_prime(double t) const;
  const char* absent_note() const;
};

BandCharacteristics band_characteristics(const BandParams& band, double x);

}  // namespace evanescent
