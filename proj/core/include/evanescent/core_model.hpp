#pragma once

#include <complex>
#include <optional>

namespace evanescent {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Scale constants of the physical problem.
struct DimensionalParams {
  double m = 1.0;
  double V = 1.0;
  double hbar = 1.0;
};

// One spacetime point with its amplitude, in either unit system.
struct SpacetimeValue {
  double x = 0.0;
  double t = 0.0;
  cplx psi{};
};

enum class UnitDirection { to_dimensionless, from_dimensionless };

SpacetimeValue convert_units(const DimensionalParams& params, const SpacetimeValue& v,
                             UnitDirection direction);

// k(omega) with omega = 1 + k^2; positive imaginary below the cutoff.
cplx wavenumber(double omega);

struct SourceParams {
  double omega0 = 0.5;
  double kappa0 = 0.0;
  std::optional<double> band_halfwidth;

  // Evanescent monochromatic source, 0 < omega0 < 1.
  static SourceParams make(double omega0);
  static SourceParams make_band(double omega0, double delta_omega);

  double Omega0() const { return -kappa0 * kappa0; }
  double tau(double x) const { return x / (2.0 * kappa0); }
  // e^{2 kappa0 x}, the factor that turns |psi|^2 into A.
  double amplification(double x) const;
};

struct SaddleFrame {
  double x = 0.0;
  double t = 0.0;
  double k_s = 0.0;
  double Omega_s = 0.0;
  double omega_s = 1.0;
  double lambda = 0.0;
  double tau = 0.0;

  static SaddleFrame at(const SourceParams& src, double x, double t);
};

struct CharacteristicScales {
  double tau = 0.0;
  double t_f = 0.0;
  double T0 = 0.0;
  double v_m = 0.0;
  double v_f = 0.0;
  double v_env = 0.0;
  double M_at_tau = 0.0;
};

CharacteristicScales characteristic_scales(const SourceParams& src, double x);

}  // namespace evanescent
