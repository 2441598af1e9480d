#pragma once

#include <complex>
#include <string>
#include <vector>

#include "evanescent/core_model.hpp"

namespace evanescent {

// Wave from a source switched on at t = 0; zero for t <= 0.
cplx psi_exact(const SourceParams& src, double x, double t);

cplx psi_saddle(const SourceParams& src, double x, double t);
// Monochromatic front, with the step taken as 1/2 at t = tau.
cplx psi_pole(const SourceParams& src, double x, double t);

// |pole| / |saddle| with the step dropped.
double ratio_R(const SourceParams& src, double x, double t);

struct SharpWaveDecomposition {
  cplx psi_exact;
  cplx psi_saddle;
  cplx psi_pole;
  cplx psi_approx;
  double ratio_R = 0.0;
  cplx u0_prime;
  cplx u0_doubleprime;
};

SharpWaveDecomposition decompose(const SourceParams& src, double x, double t);

// Common modulus of the two w-function arguments.
double argument_modulus(const SourceParams& src, double x, double t);

struct TransitionTime {
  double closed_form = 0.0;
  double numeric_root = 0.0;
  double v_tr = 0.0;
};

TransitionTime transition_time(const SourceParams& src, double x);

// -d(arg psi)/dt by a central difference of the unwrapped phase.
double avg_frequency(const SourceParams& src, double x, double t, double dt);

struct TraceRow {
  double x = 0.0;
  double t = 0.0;
  double re_psi = 0.0;
  double im_psi = 0.0;
  double density = 0.0;
  double amplified = 0.0;
  double log10_A = 0.0;
  double omega_bar = 0.0;
  bool ok = true;
  bool omega_bar_ok = true;
  std::string error;
};

// Step used by trace() for the frequency stencil at (x, t).
double frequency_step(double x, double t);

std::vector<TraceRow> trace(const SourceParams& src, double x, const std::vector<double>& t_grid,
                            unsigned threads = 1);

}  // namespace evanescent
