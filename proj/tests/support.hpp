#pragma once

#include <cmath>
#include <complex>
#include <random>

namespace testing_support {

using cplx = std::complex<double>;

inline double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// Fixed-seed generator so property runs are reproducible.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
  cplx in_disk(double r) {
    const double rho = r * std::sqrt(uniform(0.0, 1.0));
    const double phi = uniform(-M_PI, M_PI);
    return std::polar(rho, phi);
  }
  cplx upper_half(double r) {
    cplx z = in_disk(r);
    if (z.imag() < 0) z = std::conj(z);
    if (z.imag() < 1e-3) z += cplx(0.0, 1e-3);
    return z;
  }
};

}  // namespace testing_support
