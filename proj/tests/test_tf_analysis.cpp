#include <boost/math/tools/minima.hpp>

#include "doctest.h"
#include "evanescent/error.hpp"
#include "evanescent/sharp_source.hpp"
#include "evanescent/tf_analysis.hpp"
#include "support.hpp"

using namespace evanescent;
using testing_support::Gen;
using testing_support::rel_err;

namespace {
const double kTfig = 52.36;
double argmax(const std::function<double(double)>& f, double a, double b) {
  return boost::math::tools::brent_find_minima([&](double t) { return -f(t); }, a, b, 52).first;
}
}  // namespace

TEST_CASE("stft of simple signals") {
  CHECK(stft_numeric([](double) { return cplx(0, 0); }, 5, 0.3, 2) == cplx(0, 0));
  const double w0 = 0.5, T = 7.3, t = 4.1;
  for (double w : {0.5, 0.7, 1.9}) {
    const cplx v = stft_numeric([&](double s) { return std::exp(cplx(0, -w0 * s)); }, T, w, t);
    const double d = w - w0;
    const cplx want = d == 0 ? cplx(2 / std::sqrt(2 * M_PI) * T / 2, 0)
                             : 2 / std::sqrt(2 * M_PI) * std::exp(cplx(0, d * t)) * std::sin(d * T / 2) / d;
    CHECK(std::abs(v - want) < 1e-10);
  }
  CHECK_THROWS_AS(stft_numeric([](double) { return cplx(1, 0); }, 0, 0.3, 2), Error);
}

TEST_CASE("pole stft, numeric against closed form in all three regimes") {
  auto s = SourceParams::make(0.5);
  const double x = 10, tau = s.tau(x), T = 6.0;
  auto pole = [&](double u) { return u < tau ? cplx(0, 0) : std::exp(cplx(-s.kappa0 * x, -0.5 * u)); };
  StftOptions opt;
  opt.onset = tau;
  opt.abs_tol = 1e-13;
  for (double t : {tau - 5.0, tau - 2.0, tau, tau + 2.5, tau + 3.0, tau + 9.0}) {
    for (double w : {0.5, 0.5 + 1e-9, 0.8, 0.1, 2.0}) {
      const cplx n = stft_numeric(pole, T, w, t, opt);
      const cplx c = stft_closed(Component::pole, s, x, t, w, T);
      CHECK(std::abs(n - c) <= 1e-10 * std::max(1.0, std::exp(-s.kappa0 * x) * T));
    }
  }
  const cplx flat = stft_closed(Component::pole, s, x, tau + 20, 0.5, T);
  CHECK(std::abs(flat) == doctest::Approx(2 / std::sqrt(2 * M_PI) * std::exp(-s.kappa0 * x) * T / 2).epsilon(1e-13));
  CHECK(stft_closed(Component::pole, s, x, tau - T / 2 - 0.1, 0.5, T) == cplx(0, 0));
}

TEST_CASE("saddle stft") {
  auto s = SourceParams::make(0.5);
  const double x = 135;
  for (double t : {40.0, 95.0, 300.0}) {
    const double Os = x * x / (4 * t * t);
    auto mag = [&](double w) { return std::abs(stft_closed(Component::saddle, s, x, t, w, kTfig)); };
    CHECK(argmax(mag, 1 + Os - 0.05, 1 + Os + 0.05) == doctest::Approx(1 + Os).epsilon(1e-6));
    CHECK(mag(1 + Os) == doctest::Approx(mag(1 + Os + 1e-9)).epsilon(1e-9));
  }
  // |F_s|^2 N reproduces S_s
  for (double t : {50.0, 130.0})
    for (double w : {0.3, 0.5, 1.2})
      CHECK(kSpectrogramNorm * std::norm(stft_closed(Component::saddle, s, x, t, w, kTfig)) ==
            doctest::Approx(saddle_spectrogram(s, x, t, w, kTfig)).epsilon(1e-12));
  // at t = tau the saddle at omega0 is not exponentially small, the pole is
  const double tau = s.tau(x);
  CHECK(std::abs(stft_closed(Component::saddle, s, x, tau, 0.5, kTfig)) > 1e-3);
  CHECK(std::abs(stft_closed(Component::pole, s, x, tau + kTfig, 0.5, kTfig)) < 1e-40);
}

TEST_CASE("exact-wave stft against the closed forms where the saddle form holds") {
  auto s = SourceParams::make(0.5);
  const double x = 135;
  int checked = 0;
  for (double t : {420.0, 500.0, 650.0}) {
    REQUIRE(saddle_validity(x, kTfig, t).ok);
    const double Os = x * x / (4 * t * t);
    for (double w : {1 + Os, 1 + Os + 0.02, 0.5}) {
      const cplx n = stft_exact(s, x, kTfig, w, t);
      const cplx c = stft_closed(Component::saddle, s, x, t, w, kTfig) +
                     stft_closed(Component::pole, s, x, t, w, kTfig);
      if (std::abs(c) < 1e-6) continue;
      CHECK(rel_err(n, c) <= 0.10);
      ++checked;
    }
  }
  CHECK(checked >= 6);
  CHECK_FALSE(saddle_validity(x, kTfig, 100).ok);
}

TEST_CASE("exact-wave stft is zero before the window reaches the onset") {
  auto s = SourceParams::make(0.5);
  for (double t : {-100.0, -30.0, -kTfig / 2 - 1e-9})
    CHECK(stft_exact(s, 135, kTfig, 0.5, t) == cplx(0, 0));
  CHECK(std::abs(stft_exact(s, 135, kTfig, 0.5, -kTfig / 2 + 1.0)) > 0.0);
}

TEST_CASE("fast-phase endpoint term against brute quadrature") {
  auto s = SourceParams::make(0.5);
  const double x = 7, T = 4;
  StftOptions opt;
  // brute force cannot start at 0: the chirp x^2/4s diverges there
  opt.onset = 0.002;
  opt.abs_tol = 1e-12;
  for (double w : {0.5, 1.5}) {
    const cplx brute = stft_numeric([&](double u) { return psi_exact(s, x, u); }, T, w, 1.0, opt);
    CHECK(std::abs(stft_exact(s, x, T, w, 1.0) - brute) < 5e-8);
  }
}

TEST_CASE("alpha, beta and the saddle density") {
  auto s = SourceParams::make(0.5);
  const double x = 135, tau = s.tau(x);
  for (double t : {20.0, 95.0, 400.0})
    CHECK(std::norm(psi_saddle(s, x, t)) == doctest::Approx(alpha(s, x, t) / M_PI).epsilon(1e-12));
  auto c = characteristic_scales(s, x);
  const double ta = argmax([&](double t) { return alpha(s, x, t); }, 0.1 * tau, 5 * tau);
  const double tb = argmax([&](double t) { return beta(s, x, t); }, 0.1 * tau, 5 * tau);
  CHECK(ta == doctest::Approx(tau / std::sqrt(3.0)).epsilon(0.01));
  CHECK(tb == doctest::Approx(std::sqrt(5.0 / 3.0) * tau).epsilon(0.01));
  CHECK(ta * c.v_f == doctest::Approx(x).epsilon(0.01));
  CHECK(tb * c.v_env == doctest::Approx(x).epsilon(0.01));
}

TEST_CASE("speed relations, random sources") {
  Gen g(61);
  for (int i = 0; i < 50; ++i) {
    auto s = SourceParams::make(g.uniform(0.05, 0.95));
    const double x = g.uniform(1, 300), tau = s.tau(x);
    auto c = characteristic_scales(s, x);
    CHECK(argmax([&](double t) { return alpha(s, x, t); }, 0.05 * tau, 5 * tau) * c.v_f == doctest::Approx(x).epsilon(0.01));
    CHECK(argmax([&](double t) { return beta(s, x, t); }, 0.05 * tau, 5 * tau) * c.v_env == doctest::Approx(x).epsilon(0.01));
  }
}

TEST_CASE("saddle-only spectrogram ridge follows omega_s") {
  auto s = SourceParams::make(0.5);
  const double x = 135;
  std::vector<double> ts, ws;
  for (double t = 40; t <= 400; t += 10) ts.push_back(t);
  for (int j = 0; j <= 600; ++j) ws.push_back(0.5 + 3.5 * j / 600.0);
  auto g = spectrogram(s, x, ts, ws, kTfig, SpectrogramMode::saddle_only);
  const double dw = ws[1] - ws[0];
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double ridge = 1 + x * x / (4 * ts[i] * ts[i]);
    if (ridge > ws.back()) continue;
    std::size_t best = 0;
    for (std::size_t j = 0; j < ws.size(); ++j)
      if (g.at(i, j) > g.at(i, best)) best = j;
    CHECK(std::abs(ws[best] - ridge) <= dw);
  }
  for (double v : g.values) CHECK(v >= 0.0);
  CHECK(g.N == doctest::Approx(M_PI * M_PI / 2));
}

TEST_CASE("full spectrogram matches the per-cell transform and is thread independent") {
  auto s = SourceParams::make(0.5);
  const double x = 135;
  std::vector<double> ts{60, 120, 200}, ws{0.4, 0.5, 1.0, 1.6};
  auto a = spectrogram(s, x, ts, ws, kTfig, SpectrogramMode::full, 1);
  auto b = spectrogram(s, x, ts, ws, kTfig, SpectrogramMode::full, 3);
  CHECK(a.values == b.values);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j) {
      CHECK_FALSE(a.failed[i * ws.size() + j]);
      const double cell = kSpectrogramNorm * std::norm(stft_exact(s, x, kTfig, ws[j], ts[i]));
      CHECK(a.at(i, j) == doctest::Approx(cell).epsilon(1e-6));
    }
  CHECK_THROWS_AS(spectrogram(s, x, {2, 1}, ws, kTfig, SpectrogramMode::full), Error);
}

TEST_CASE("signal frequency cut") {
  auto s = SourceParams::make(0.5);
  const double x = 135, tau = s.tau(x);
  std::vector<double> ts;
  for (double t = 1; t <= 1500; t += 1) ts.push_back(t);
  auto c = signal_frequency_cut(s, x, kTfig, ts);
  CHECK(c.envelope_peak == doctest::Approx(std::sqrt(5.0 / 3.0) * tau).epsilon(0.01));
  CHECK(c.envelope_peak_formula == doctest::Approx(123.2).epsilon(1e-3));
  CHECK(c.growth_exponent == doctest::Approx(5.0).epsilon(0.02));
  CHECK(c.decay_exponent == doctest::Approx(-3.0).epsilon(0.04));
  CHECK_FALSE(c.single_bump);
  REQUIRE(!c.zeros.empty());
  double smax = 0;
  for (double v : c.S) smax = std::max(smax, v);
  for (std::size_t k = 0; k < c.zeros.size(); ++k) {
    CHECK(saddle_spectrogram(s, x, c.zeros[k], 0.5, kTfig) <= 1e-10 * smax);
    CHECK(c.zeros[k] == doctest::Approx(*zero_time(s, x, kTfig, c.zero_index[k])));
  }
  CHECK(c.zeros_after_tau == 4);
  for (std::size_t i = 0; i < ts.size(); ++i) CHECK(c.S[i] <= c.envelope[i] * (1 + 1e-12));
  CHECK_FALSE(zero_time(s, x, kTfig, 4).has_value());
}

TEST_CASE("zeros of the saddle spectrogram, random windows") {
  Gen g(62);
  for (int i = 0; i < 100; ++i) {
    auto s = SourceParams::make(g.uniform(0.1, 0.9));
    const double x = g.uniform(10, 200), T = g.uniform(1, 80);
    for (int n = 1; n < 40; ++n) {
      auto tn = zero_time(s, x, T, n);
      if (!tn) continue;
      double smax = 0;
      for (double t = 0.05 * s.tau(x); t < 20 * s.tau(x); t *= 1.01)
        smax = std::max(smax, saddle_spectrogram(s, x, t, s.omega0, T));
      CHECK(saddle_spectrogram(s, x, *tn, s.omega0, T) <= 1e-10 * smax);
      break;
    }
  }
}

TEST_CASE("window equal to T0 gives one bump") {
  auto s = SourceParams::make(0.5);
  const double x = 135, tau = s.tau(x);
  std::vector<double> ts;
  for (double t = 1; t <= 1000; t += 0.5) ts.push_back(t);
  auto c = signal_frequency_cut(s, x, 12.57, ts);
  CHECK(c.single_bump);
  CHECK_FALSE(c.note.empty());
  std::size_t best = 0;
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (c.S[i] > c.S[best]) best = i;
  CHECK(ts[best] > tau);
  CHECK(ts[best] < 2 * tau);
}

TEST_CASE("frequency-window spectrogram") {
  auto b = BandParams::make(0.5, 0.12);
  CHECK(2 * M_PI / 0.12 == doctest::Approx(kTfig).epsilon(1e-4));
  std::vector<double> ts;
  for (double t = -300; t <= 300; t += 5) ts.push_back(t);
  auto tr = freq_window_spectrogram(b, 135, ts, 2);
  std::size_t best = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK_FALSE(tr.failed[i]);
    if (tr.S_prime[i] > tr.S_prime[best]) best = i;
    CHECK(tr.S_prime[i] == doctest::Approx(tr.constant * std::norm(psi_band(b, 135, ts[i]))).epsilon(1e-12));
  }
  CHECK(ts[best] == 0.0);
  CHECK(tr.constant == doctest::Approx(M_PI * M_PI / 2));
}
