#include "doctest.h"
#include "evanescent/band_source.hpp"
#include "evanescent/error.hpp"
#include "evanescent/oracle.hpp"
#include "support.hpp"

using namespace evanescent;
using testing_support::Gen;
using testing_support::rel_err;

TEST_CASE("band parameters") {
  auto b = BandParams::make(0.5, 0.12);
  CHECK(b.kappa_plus < b.kappa0);
  CHECK(b.kappa0 < b.kappa_minus);
  CHECK(b.omega_plus == doctest::Approx(0.62));
  CHECK_THROWS_AS(BandParams::make(0.9, 0.1), Error);
  CHECK_THROWS_AS(BandParams::make(0.5, 0.0), Error);
}

TEST_CASE("source signal") {
  auto b = BandParams::make(0.5, 0.12);
  CHECK(std::abs(band_source_signal(b, 0.0)) == doctest::Approx(0.5));
  CHECK(std::abs(band_source_signal(b, 1.0 / 0.12)) == doctest::Approx(1.0 - 0.6247132564277136 / M_PI).epsilon(1e-12));
  CHECK(std::abs(band_source_signal(b, 1.0 / 0.12)) == doctest::Approx(0.8011).epsilon(1e-4));
  CHECK(std::abs(std::abs(band_source_signal(b, 1e5)) - 1.0) < 1e-3);
  CHECK(std::abs(band_source_signal(b, -1e5)) < 1e-3);
  // continuity through the onset
  CHECK(std::abs(band_source_signal(b, 1e-9) - band_source_signal(b, -1e-9)) < 1e-9);
}

TEST_CASE("endpoint path geometry") {
  for (int sg : {1, -1}) {
    for (double z : {-0.2, -1.0, -3.0, -40.0}) {
      auto pts = endpoint_path(z, sg, 20.0);
      REQUIRE(pts.size() > 10);
      CHECK(std::abs(pts[0].y - cplx(z, 0)) <= 1e-14 * std::abs(z));
      const double ang = std::arg(pts[1].y - pts[0].y);
      double want = endpoint_angle(z, sg);
      if (want > M_PI) want -= 2 * M_PI;
      CHECK(std::abs(std::remainder(ang - want, 2 * M_PI)) < 1e-2);
      double prev = 1e300;
      for (const auto& p : pts) {
        const double re = (cplx(0, sg) * (2.0 * p.q - p.y)).real();
        CHECK(re <= prev + 1e-12);
        prev = re;
        const double yr = p.y.real();
        const double quartic = std::pow(yr, 4) - 4 * std::pow(yr, 3) * (1 + z) + 2 * yr * yr * z * (4 + 3 * z) -
                               4 * z * z * yr * (1 + z) + z * z * z * z;
        // the quartic cancels heavily for |y| >> 1, so compare squares against its scale
        const double scale = std::pow(std::abs(p.y) + std::abs(z) + 1.0, 4);
        CHECK(std::abs(4 * p.y.imag() * p.y.imag() - quartic) <= 1e-12 * scale);
      }
    }
  }
  auto p = endpoint_path(-1.0, 1, 5.0);
  const cplx d = p[1].y - p[0].y;
  CHECK(d.imag() / d.real() == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(endpoint_path(0.5, 1, 1.0), Error);
}

TEST_CASE("descent property, random endpoints") {
  Gen g(51);
  for (int i = 0; i < 40; ++i) {
    const double z = -g.log_uniform(1e-2, 1e2);
    const int sg = g.uniform(0, 1) < 0.5 ? -1 : 1;
    auto pts = endpoint_path(z, sg, g.uniform(1, 50));
    for (std::size_t k = 1; k < pts.size(); ++k) {
      const double a = (cplx(0, sg) * (2.0 * pts[k - 1].q - pts[k - 1].y)).real();
      const double b = (cplx(0, sg) * (2.0 * pts[k].q - pts[k].y)).real();
      CHECK(b <= a + 1e-12);
    }
  }
}

TEST_CASE("leading endpoint term") {
  auto b = BandParams::make(0.5, 0.12);
  const double x = 135, tau = x / (2 * b.kappa0);
  auto up = endpoint_contribution(b, Endpoint::upper, x, tau);
  const double tp = x / (2 * b.kappa_plus);
  CHECK(up.t_crit == doctest::Approx(tp));
  CHECK(std::abs(up.value_leading) ==
        doctest::Approx(std::exp(-x * b.kappa_plus) / (2 * M_PI * 0.12 * std::sqrt(tau * tau + tp * tp))).epsilon(1e-12));
  CHECK(up.theta_z == doctest::Approx(M_PI + std::atan(std::sqrt(-up.z))));
  CHECK(endpoint_contribution(b, Endpoint::upper, 50, 10).t_crit == doctest::Approx(40.56).epsilon(1e-3));

  // |D0| is largest at t = 0
  double best = 0, best_t = 1e9;
  for (double t = -200; t <= 200; t += 0.5) {
    if (t == 0) continue;
    const double m = std::abs(endpoint_contribution(b, Endpoint::upper, x, t).value_leading);
    if (m > best) {
      best = m;
      best_t = t;
    }
  }
  CHECK(std::abs(best_t) <= 0.5);
}

TEST_CASE("leading term modulus, random parameters") {
  Gen g(52);
  for (int i = 0; i < 200; ++i) {
    const double w0 = g.uniform(0.1, 0.8), dw = g.uniform(0.01, 0.99 * (1 - w0));
    if (dw >= w0 + 1.0) continue;
    auto b = BandParams::make(w0, dw);
    const double x = g.uniform(1, 100), t = g.uniform(-300, 300);
    for (Endpoint e : {Endpoint::lower, Endpoint::upper}) {
      auto c = endpoint_contribution(b, e, x, t);
      const double k = e == Endpoint::upper ? b.kappa_plus : b.kappa_minus;
      const double tc = x / (2 * k);
      CHECK(std::abs(c.value_leading) ==
            doctest::Approx(std::exp(-x * k) / (2 * M_PI * dw * std::sqrt(t * t + tc * tc))).epsilon(1e-11));
    }
  }
}

TEST_CASE("psi_band against the oracle on the figure grids") {
  auto b = BandParams::make(0.5, 0.12);
  for (double x : {13.5, 50.0, 135.0}) {
    for (int i = 0; i < 50; ++i) {
      const double t = -150.0 + 450.0 * i / 49.0;
      const cplx a = psi_band(b, x, t);
      const cplx o = oracle::psi_band_oracle(b, x, t);
      CHECK(std::abs(a - o) <= std::max(1e-6, 1e-3 * std::abs(o)));
      CHECK(std::abs(a - o) <= 1e-9 * std::abs(o));
    }
  }
}

TEST_CASE("psi_band details") {
  auto b = BandParams::make(0.5, 0.12);
  auto d = psi_band_detailed(b, 50, 10);
  CHECK(d.near_pole);
  CHECK_FALSE(d.used_oracle);
  CHECK(std::abs(d.residue) == doctest::Approx(std::exp(-b.kappa0 * 50)));
  CHECK(std::abs(d.psi - (d.d_minus - d.d_plus + d.residue)) == 0.0);
  auto n = psi_band_detailed(b, 50, -10);
  CHECK(n.residue == cplx(0, 0));
  auto z = psi_band_detailed(b, 50, 0.0);
  CHECK(z.used_oracle);
  CHECK_FALSE(psi_band_detailed(b, 50, 100).near_pole);
  CHECK_THROWS_AS(psi_band(b, -1, 3), Error);
}

TEST_CASE("psi_band near the source") {
  auto b = BandParams::make(0.5, 0.12);
  for (double t : {-30.0, -2.0, 1.0, 40.0}) {
    CHECK(psi_band(b, 0.0, t) == band_source_signal(b, t));
    CHECK(std::abs(psi_band(b, 1e-6, t) - band_source_signal(b, t)) < 1e-5);
  }
}

TEST_CASE("psi_band against the oracle, random parameters") {
  Gen g(53);
  for (int i = 0; i < 60; ++i) {
    const double w0 = g.uniform(0.1, 0.8), dw = g.uniform(0.02, 0.95 * (1 - w0));
    auto b = BandParams::make(w0, dw);
    const double x = g.uniform(0.5, 80), t = g.uniform(-200, 400);
    const cplx o = oracle::psi_band_oracle(b, x, t);
    CHECK(std::abs(psi_band(b, x, t) - o) <= std::max(1e-6, 1e-3 * std::abs(o)));
  }
}

TEST_CASE("leading-order error falls like 1/lambda") {
  auto b = BandParams::make(0.5, 0.12);
  const double Os = 0.1;
  std::vector<double> lx, ly;
  for (double lam = 10; lam <= 1e4 * 1.0001; lam *= std::pow(10.0, 0.25)) {
    const double t = lam / Os, x = 2 * t * std::sqrt(Os);
    auto c = endpoint_contribution(b, Endpoint::upper, x, t);
    REQUIRE_FALSE(c.near_pole);
    lx.push_back(std::log(lam));
    ly.push_back(std::log(c.relative_correction()));
  }
  const double n = lx.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.15));
}

TEST_CASE("small band expansion of the decay gap") {
  for (double w0 : {0.2, 0.5, 0.8}) {
    for (double dw : {1e-2, 1e-3, 1e-4}) {
      auto b = BandParams::make(w0, dw);
      const double x = 20, tau = x / (2 * b.kappa0);
      const double lhs = (b.kappa_plus - b.kappa0) * x;
      CHECK(std::abs(lhs + dw * tau) <= dw / (1 - w0) * dw * tau);
    }
  }
}

TEST_CASE("band characteristics") {
  auto b = BandParams::make(0.5, 0.12);
  auto c = band_characteristics(b, 50);
  REQUIRE(c.t_tr_exact.has_value());
  CHECK(*c.t_tr_exact == doctest::Approx(116.6).epsilon(1e-3));
  CHECK(c.t_tr_approx == doctest::Approx(123.4).epsilon(1e-3));
  CHECK(c.r_prime(*c.t_tr_exact) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.r_prime(0) == doctest::Approx(std::exp((b.kappa_plus - b.kappa0) * 50) * 2 * M_PI * 0.12 * c.t_plus));
  CHECK(c.v_tr_prime(100) == doctest::Approx(1.0 / (100 * (b.kappa0 - b.kappa_plus))));

  // bracketed root of R'(t) = 1
  double lo = 0, hi = 1000;
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (lo + hi);
    (c.r_prime(m) < 1 ? lo : hi) = m;
  }
  CHECK(lo == doctest::Approx(*c.t_tr_exact).epsilon(1e-10));

  auto c2 = band_characteristics(b, 13.5);
  CHECK_FALSE(c2.t_tr_exact.has_value());
  CHECK(c2.radicand < 0);
  CHECK(std::string(c2.absent_note()).find("imaginary") != std::string::npos);
  CHECK(c2.tau == doctest::Approx(9.546).epsilon(1e-3));

  auto c3 = band_characteristics(b, 135);
  CHECK(c3.fast_onset_ratio == doctest::Approx(0.12 * c3.tau / (2 * M_PI)));
  CHECK(c3.fast_onset_ok);
  CHECK(c3.evanescent_ok);
}
