#pragma once

#include <complex>

#include "evanescent/core_model.hpp"

namespace evanescent {

// w(z) = exp(-z^2) erfc(-iz).
cplx faddeeva_w(cplx z);

struct AsymptoticSeriesResult {
  cplx value;
  int terms_used = 0;
  double estimated_error = 0.0;
};

// Large-|z| series i/(sqrt(pi) z) [1 + sum (2m-1)!!/(2z^2)^m], cut at its smallest term.
// Below the real axis the exponential 2 exp(-z^2) is added, on it half of that.
AsymptoticSeriesResult faddeeva_w_asymptotic(cplx z, int max_terms = 60);

// E1(z) = int_z^inf e^{-s}/s ds, principal branch.
cplx exp_integral_e1(cplx z);

// PV int_{-b}^{a} e^{-iY}/Y dY.
cplx pv_oscillatory(double a, double b);

// int over the real k line (passing above k0) of e^{-i(a k^2 + b k)}/(k - k0) dk.
cplx gaussian_pole_integral(double a, double b, cplx k0);

}  // namespace evanescent
