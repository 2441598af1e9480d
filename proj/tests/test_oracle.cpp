#include <limits>

#include "doctest.h"
#include "evanescent/band_source.hpp"
#include "evanescent/error.hpp"
#include "evanescent/oracle.hpp"
#include "support.hpp"

using namespace evanescent;
using testing_support::Gen;
using testing_support::rel_err;

namespace {
// erfc(1) by its continued fraction, independent of every library routine
double erfc1() {
  const double x = 1.0;
  double f = x;
  for (int k = 200; k >= 1; --k) f = x + (k / 2.0) / f;
  return std::exp(-x * x) / (std::sqrt(M_PI) * f);
}
}  // namespace

TEST_CASE("adaptive_quad basics") {
  auto one = oracle::adaptive_quad([](double) { return cplx(1.0, 0.0); }, 0, 1, 1e-14);
  CHECK(std::abs(one.value - 1.0) < 1e-15);
  CHECK(one.abs_error_estimate >= 0.0);
  CHECK(one.evaluations > 0);

  const double inf = std::numeric_limits<double>::infinity();
  auto g = oracle::adaptive_quad([](double u) { return cplx(std::exp(-u * u), 0); }, 0, inf, 1e-13);
  CHECK(g.value.real() == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-12));
  auto g2 = oracle::adaptive_quad([](double u) { return cplx(std::exp(-u * u), 0); }, -inf, inf, 1e-13);
  CHECK(g2.value.real() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
  auto g3 = oracle::adaptive_quad([](double u) { return cplx(std::exp(u), 0); }, -inf, 0.0, 1e-13);
  CHECK(g3.value.real() == doctest::Approx(1.0).epsilon(1e-12));

  const double w_i = std::exp(1.0) * erfc1();
  CHECK(w_i == doctest::Approx(0.4275835761558070).epsilon(1e-14));
  auto l = oracle::adaptive_quad([](double u) { return std::exp(-u * u) / (u - cplx(0, 1)); }, -inf, inf, 1e-13);
  CHECK(std::abs(l.value - cplx(0, M_PI * w_i)) < 1e-11);
}

TEST_CASE("adaptive_quad reports failure with a partial result") {
  auto bad = [](double u) { return cplx(1.0 / std::sqrt(std::abs(u - 0.3)), 0); };
  try {
    oracle::adaptive_quad(bad, 0, 1, 1e-15, 8);
    FAIL("expected failure");
  } catch (const QuadratureFailure& e) {
    CHECK(e.kind() == ErrorKind::quadrature_failure);
    CHECK(std::isfinite(e.partial().real()));
  }
}

TEST_CASE("faddeeva_oracle") {
  CHECK(rel_err(oracle::faddeeva_oracle({0, 1}), {0.4275835761558070, 0}) < 1e-12);
  CHECK_THROWS_AS(oracle::faddeeva_oracle({1, 0}), Error);
  // large |z| against the first terms of the series i/(sqrt(pi) z)(1 + 1/(2z^2) + 3/(4z^4) + ...)
  const cplx z(0, 10);
  cplx s = 1.0, term = 1.0;
  for (int m = 1; m < 12; ++m) {
    term *= (2.0 * m - 1) / (2.0 * z * z);
    s += term;
  }
  CHECK(rel_err(oracle::faddeeva_oracle(z), cplx(0, 1) / (std::sqrt(M_PI) * z) * s) < 1e-10);
}

TEST_CASE("faddeeva_oracle conjugate relation, random points") {
  Gen g(31);
  for (int i = 0; i < 30; ++i) {
    const cplx z = g.upper_half(5.0);
    // w(-z*) = w(z)* for Im z > 0, both arguments upper half
    const cplx a = oracle::faddeeva_oracle(-std::conj(z));
    const cplx b = std::conj(oracle::faddeeva_oracle(z));
    CHECK(rel_err(a, b) < 1e-11);
  }
}

TEST_CASE("halving tol stays within the previous estimate") {
  auto f = [](double u) { return std::exp(cplx(-u * u, 3.0 * u)) / (u - cplx(0.2, 0.05)); };
  auto a = oracle::adaptive_quad(f, -7, 7, 1e-8);
  auto b = oracle::adaptive_quad(f, -7, 7, 5e-9);
  CHECK(std::abs(a.value - b.value) <= std::max(a.abs_error_estimate, 1e-8));
}

TEST_CASE("psi_band_oracle") {
  auto band = BandParams::make(0.5, 0.12);
  // x = 0 against the closed form e^{-i w0 t}[1/2 + Si(dw t)/pi]
  for (double t : {-40.0, -3.0, 0.5, 7.0, 120.0}) {
    const cplx o = oracle::psi_band_oracle(band, 0.0, t);
    const cplx c = band_source_signal(band, t);
    CHECK(std::abs(o - c) < 1e-10);
  }
  const double tau = 13.5 / (2 * band.kappa0);
  const cplx v = oracle::psi_band_oracle(band, 13.5, 2 * tau);
  CHECK(rel_err(v, {-8.306730975603678423e-5, 1.942383043303135178e-6}) < 1e-10);
  CHECK(rel_err(v, oracle::psi_band_oracle(band, 13.5, 2 * tau, 5e-13)) < 1e-11);
}

TEST_CASE("psi_band_oracle vanishes with the band") {
  double prev = 1.0;
  for (double dw : {1e-2, 1e-3, 1e-4, 1e-5}) {
    auto band = BandParams::make(0.5, dw);
    const cplx pv_part = oracle::psi_band_oracle(band, 3.0, 5.0) -
                         0.5 * std::exp(cplx(-band.kappa0 * 3.0, -0.5 * 5.0));
    CHECK(std::abs(pv_part) < prev);
    prev = std::abs(pv_part);
  }
  CHECK(prev < 1e-4);
}

TEST_CASE("psi_band_oracle is continuous through t = 0") {
  auto band = BandParams::make(0.5, 0.12);
  const cplx a = oracle::psi_band_oracle(band, 5.0, -1e-7);
  const cplx b = oracle::psi_band_oracle(band, 5.0, 0.0);
  const cplx c = oracle::psi_band_oracle(band, 5.0, 1e-7);
  // no kink: the one-sided slopes agree
  CHECK(std::abs((c - b) - (b - a)) < 1e-12 * std::abs(b));
  CHECK(std::abs(c - a) < 1e-5 * std::abs(b));
}

TEST_CASE("pv oracle symmetric value") {
  CHECK(std::abs(oracle::pv_oscillatory_oracle(M_PI, M_PI) - cplx(0, -2 * 1.851937051982466170)) < 1e-12);
}
