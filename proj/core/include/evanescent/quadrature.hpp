#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace evanescent::quad {

using cplx = std::complex<double>;

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_intervals = 4000;
};

struct Outcome {
  cplx value;
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct VecOutcome {
  std::vector<cplx> value;
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Globally adaptive 7/15-point Gauss-Kronrod on [a, b].
Outcome integrate(const std::function<cplx(double)>& f, double a, double b,
                  const Options& opt = {});

// Same, for an integrand returning `dim` components at once; the error is the max-norm.
VecOutcome integrate_vec(const std::function<void(double, std::vector<cplx>&)>& f,
                         std::size_t dim, double a, double b, const Options& opt = {});

}  // namespace evanescent::quad
