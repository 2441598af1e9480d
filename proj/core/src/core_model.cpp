#include "evanescent/core_model.hpp"

#include <cmath>

#include "evanescent/error.hpp"

namespace evanescent {

SpacetimeValue convert_units(const DimensionalParams& p, const SpacetimeValue& v,
                             UnitDirection direction) {
  if (!(p.m > 0.0) || !(p.V > 0.0) || !(p.hbar > 0.0))
    throw Error(ErrorKind::invalid_parameter, "m, V and hbar must be positive");
  const double xs = std::sqrt(2.0 * p.m * p.V) / p.hbar;
  const double ts = p.V / p.hbar;
  const double ps = std::sqrt(p.hbar) * std::pow(2.0 * p.m * p.V, -0.25);
  if (direction == UnitDirection::to_dimensionless) return {v.x * xs, v.t * ts, v.psi * ps};
  return {v.x / xs, v.t / ts, v.psi / ps};
}

cplx wavenumber(double omega) {
  if (omega >= 1.0) return {std::sqrt(omega - 1.0), 0.0};
  return {0.0, std::sqrt(1.0 - omega)};
}

SourceParams SourceParams::make(double omega0) {
  if (!(omega0 > 0.0 && omega0 < 1.0))
    throw Error(ErrorKind::invalid_parameter, "evanescent source needs 0 < omega0 < 1");
  SourceParams s;
  s.omega0 = omega0;
  s.kappa0 = std::sqrt(1.0 - omega0);
  return s;
}

SourceParams SourceParams::make_band(double omega0, double delta_omega) {
  SourceParams s = make(omega0);
  if (!(delta_omega >= 0.0) || !(omega0 + delta_omega < 1.0))
    throw Error(ErrorKind::invalid_parameter, "band must satisfy dw >= 0 and omega0 + dw < 1");
  s.band_halfwidth = delta_omega;
  return s;
}

double SourceParams::amplification(double x) const { return std::exp(2.0 * kappa0 * x); }

SaddleFrame SaddleFrame::at(const SourceParams& src, double x, double t) {
  if (t == 0.0) throw Error(ErrorKind::domain, "saddle frame undefined at t = 0");
  SaddleFrame f;
  f.x = x;
  f.t = t;
  f.k_s = x / (2.0 * t);
  f.Omega_s = f.k_s * f.k_s;
  f.omega_s = 1.0 + f.Omega_s;
  f.lambda = x * x / (4.0 * std::abs(t));
  f.tau = src.tau(x);
  return f;
}

CharacteristicScales characteristic_scales(const SourceParams& src, double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::invalid_parameter, "x must be positive");
  if (!(src.kappa0 > 0.0)) throw Error(ErrorKind::invalid_parameter, "source is not evanescent");
  CharacteristicScales c;
  c.tau = src.tau(x);
  c.t_f = c.tau / std::sqrt(3.0);
  c.T0 = 2.0 * kPi / std::abs(src.Omega0());
  c.v_m = 2.0 * src.kappa0;
  c.v_f = std::sqrt(3.0) * c.v_m;
  c.v_env = std::sqrt(3.0 / 5.0) * c.v_m;
  c.M_at_tau = std::sqrt(src.kappa0 * x);
  return c;
}

}  // namespace evanescent
