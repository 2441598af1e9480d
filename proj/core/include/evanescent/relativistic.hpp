#pragma once

#include <complex>

#include "evanescent/core_model.hpp"

namespace evanescent {

// Klein-Gordon source: Omega^2 = (c^2/2)^2 + c^2 k^2 with Omega = omega - 1.
struct RelParams {
  double c = 1.0;
  double omega0 = 0.5;
  double Omega0 = -0.5;
  double kappa0 = 0.0;

  static RelParams make(double c, double omega0);
  double tau(double x) const { return x / (2.0 * kappa0); }
  double theta(double x, double t) const;
  double Omega_s(double x, double t) const;
};

struct KgScales {
  double tau = 0.0;
  double light_time = 0.0;
};

KgScales kg_scales(const RelParams& rel, double x);

// Particle-branch saddle wave; exactly zero for c t <= x.
cplx psi_saddle_plus(const RelParams& rel, double x, double t);

// Saddle spectrogram, valid for t > T/2 + x/c; zero inside the light cone.
double rel_spectrogram(const RelParams& rel, double x, double T, double t, double omega);
// Same at omega0 with the sine squared replaced by one.
double rel_envelope(const RelParams& rel, double x, double T, double t);

struct EnvelopePeak {
  double t_en_formula = 0.0;
  double t_en_numeric = 0.0;
  double lower_bound = 0.0;  // tau / sqrt(3)
  double upper_bound = 0.0;  // 4 tau / sqrt(3)
  double search_lo = 0.0;
  double search_hi = 0.0;
  bool consistent = false;   // formula and numeric within 5%
  bool within_bounds = false;
};

EnvelopePeak rel_envelope_peak(const RelParams& rel, double x, double T);

}  // namespace evanescent
