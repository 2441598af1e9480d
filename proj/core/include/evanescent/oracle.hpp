#pragma once

#include <complex>
#include <functional>

#include "evanescent/band_source.hpp"
#include "evanescent/core_model.hpp"

// Brute-force references. Nothing here calls the production special functions
// or the production integrator.
namespace evanescent::oracle {

struct QuadResult {
  cplx value;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

// Locally adaptive 10/21-point Gauss-Kronrod. Either endpoint may be infinite.
// Throws QuadratureFailure (with the partial sum) past the depth limit.
QuadResult adaptive_quad(const std::function<cplx(double)>& f, double a, double b,
                         double tol, int max_depth = 60);

// PV int_a^b f(u)/(u - pole) du for a < pole < b, by folding about the pole.
QuadResult adaptive_pv(const std::function<cplx(double)>& f, double a, double b, double pole,
                       double tol);

// (1/(i pi)) int e^{-u^2}/(u - z) du over the real line; Im z > 0 only.
cplx faddeeva_oracle(cplx z, double tol = 1e-14);
// Any z: the real axis via the principal value, the lower half plane via w(-z).
cplx faddeeva_oracle_any(cplx z, double tol = 1e-14);

cplx psi_exact_oracle(const SourceParams& src, double x, double t);

// The band integral split into its principal value and half residue.
cplx psi_band_oracle(const BandParams& band, double x, double t, double rel_tol = 1e-12);

cplx pv_oscillatory_oracle(double a, double b, double tol = 1e-14);

}  // namespace evanescent::oracle
