#include "evanescent/tf_analysis.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>

#include "evanescent/error.hpp"
#include "evanescent/parallel.hpp"
#include "evanescent/quadrature.hpp"
#include "evanescent/sharp_source.hpp"

namespace evanescent {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

// sin(d L / 2) / d, continued through d = 0
double sinc_half(double d, double L) {
  const double a = 0.5 * d * L;
  if (std::abs(a) < 1e-6) return 0.5 * L * (1.0 - a * a / 6.0);
  return std::sin(a) / d;
}

double fit_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

cplx stft_numeric(const Signal& signal, double T, double omega, double t, const StftOptions& opt) {
  if (!(T > 0.0)) throw Error(ErrorKind::invalid_parameter, "stft: T must be > 0");
  double a = t - 0.5 * T;
  const double b = t + 0.5 * T;
  if (opt.onset) a = std::max(a, *opt.onset);
  if (b <= a) return 0.0;
  quad::Options q;
  q.abs_tol = opt.abs_tol / kInvSqrt2Pi;
  q.rel_tol = 0.0;
  q.max_intervals = 20000;
  auto f = [&](double s) { return std::exp(cplx(0.0, omega * s)) * signal(s); };
  quad::Outcome o = quad::integrate(f, a, b, q);
  if (!o.converged) throw QuadratureFailure("stft_numeric did not converge", o.value * kInvSqrt2Pi,
                                            o.error * kInvSqrt2Pi);
  return o.value * kInvSqrt2Pi;
}

double stft_fast_cutoff(double x, double rel_tol) {
  return std::cbrt(rel_tol * x * x * x * x / 40.0);
}

namespace {

// int^s of e^{i omega s'} psi(s') ds' to leading order where the phase x^2/(4s) races
cplx endpoint_term(const SourceParams& src, double x, double omega, double s) {
  if (s <= 0.0) return 0.0;
  const double dphi = omega - 1.0 - x * x / (4.0 * s * s);
  return psi_exact(src, x, s) * std::exp(cplx(0.0, omega * s)) / cplx(0.0, dphi);
}

}  // namespace

cplx stft_exact(const SourceParams& src, double x, double T, double omega, double t) {
  if (!(T > 0.0)) throw Error(ErrorKind::invalid_parameter, "stft: T must be > 0");
  const double a = std::max(t - 0.5 * T, 0.0);
  const double b = t + 0.5 * T;
  if (b <= a) return 0.0;
  const double tc = x > 0.0 ? stft_fast_cutoff(x) : 0.0;
  cplx fast = 0.0;
  double lo = a;
  if (a < tc) {
    const double e = std::min(b, tc);
    fast = endpoint_term(src, x, omega, e) - endpoint_term(src, x, omega, a);
    lo = e;
  }
  cplx slow = 0.0;
  if (b > lo) {
    StftOptions opt;
    // stft_numeric integrates over [t - T/2, t + T/2] clipped at the onset
    opt.onset = lo;
    slow = stft_numeric([&](double s) { return psi_exact(src, x, s); }, T, omega, t, opt);
  }
  return fast * kInvSqrt2Pi + slow;
}

SaddleValidity saddle_validity(double x, double T, double t) {
  SaddleValidity v;
  v.phase_error = x * x * T * T / (16.0 * t * t * t);
  v.window_ratio = T / t;
  v.ok = t > 0.0 && v.phase_error <= 0.05 && v.window_ratio <= 0.25;
  return v;
}

cplx stft_closed(Component component, const SourceParams& src, double x, double t, double omega,
                 double T) {
  if (!(T > 0.0)) throw Error(ErrorKind::invalid_parameter, "stft_closed: T must be > 0");
  if (component == Component::pole) {
    const double tau = src.tau(x);
    const double d = omega - src.omega0;
    const double amp = std::exp(-src.kappa0 * x) * kInvSqrt2Pi;
    if (t <= tau - 0.5 * T) return 0.0;
    if (t >= tau + 0.5 * T) return 2.0 * amp * std::exp(cplx(0.0, d * t)) * sinc_half(d, T);
    const double b = t + 0.5 * T;
    // front inside the window: integrate from tau only
    return 2.0 * amp * std::exp(cplx(0.0, 0.5 * d * (b + tau))) * sinc_half(d, b - tau);
  }
  if (t <= 0.0) return 0.0;
  const double Os = x * x / (4.0 * t * t);
  const double d = Os + 1.0 - omega;
  const cplx root = std::sqrt(cplx(0.0, -2.0 / (Os * t)));
  return cplx(0.0, 1.0 / kPi) * root * (Os / (Os - src.Omega0())) *
         std::exp(cplx(0.0, (Os - 1.0 + omega) * t)) * sinc_half(d, T);
}

double alpha(const SourceParams& src, double x, double t) {
  const double Os = x * x / (4.0 * t * t);
  const double g = Os - src.Omega0();
  return Os / (t * g * g);
}

double beta(const SourceParams& src, double x, double t) {
  const double Os = x * x / (4.0 * t * t);
  const double g = Os - src.Omega0();
  return Os / (t * g * g * g * g);
}

double saddle_spectrogram(const SourceParams& src, double x, double t, double omega, double T) {
  if (t <= 0.0) return 0.0;
  const double Os = x * x / (4.0 * t * t);
  const double s = sinc_half(Os + 1.0 - omega, T);
  return alpha(src, x, t) * s * s;
}

SpectrogramGrid spectrogram(const SourceParams& src, double x, const std::vector<double>& t_axis,
                            const std::vector<double>& omega_axis, double T, SpectrogramMode mode,
                            unsigned threads) {
  if (!(T > 0.0)) throw Error(ErrorKind::invalid_parameter, "spectrogram: T must be > 0");
  for (const auto* ax : {&t_axis, &omega_axis})
    for (std::size_t i = 1; i < ax->size(); ++i)
      if (!((*ax)[i] > (*ax)[i - 1]))
        throw Error(ErrorKind::invalid_parameter, "spectrogram: axes must be strictly increasing");
  SpectrogramGrid g;
  g.t_axis = t_axis;
  g.omega_axis = omega_axis;
  g.T = T;
  g.x = x;
  const std::size_t nt = t_axis.size(), nw = omega_axis.size();
  g.values.assign(nt * nw, 0.0);
  g.failed.assign(nt * nw, 0);
  g.saddle_ok.assign(nt * nw, 0);

  parallel_for(nt, threads, [&](std::size_t i) {
    const double t = t_axis[i];
    const unsigned char ok = saddle_validity(x, T, t).ok ? 1 : 0;
    for (std::size_t j = 0; j < nw; ++j) g.saddle_ok[i * nw + j] = ok;
    if (mode == SpectrogramMode::saddle_only) {
      for (std::size_t j = 0; j < nw; ++j)
        g.values[i * nw + j] = saddle_spectrogram(src, x, t, omega_axis[j], T);
      return;
    }
    try {
      const double a = std::max(t - 0.5 * T, 0.0);
      const double b = t + 0.5 * T;
      if (b <= a) return;
      const double tc = x > 0.0 ? stft_fast_cutoff(x) : 0.0;
      std::vector<cplx> F(nw, 0.0);
      double lo = a;
      if (a < tc) {
        const double e = std::min(b, tc);
        for (std::size_t j = 0; j < nw; ++j)
          F[j] = endpoint_term(src, x, omega_axis[j], e) - endpoint_term(src, x, omega_axis[j], a);
        lo = e;
      }
      if (b > lo) {
        auto f = [&](double s, std::vector<cplx>& out) {
          const cplx p = psi_exact(src, x, s);
          for (std::size_t j = 0; j < nw; ++j) out[j] = std::exp(cplx(0.0, omega_axis[j] * s)) * p;
        };
        quad::Options q;
        q.abs_tol = 1e-10 / kInvSqrt2Pi;
        q.rel_tol = 0.0;
        q.max_intervals = 20000;
        quad::VecOutcome o = quad::integrate_vec(f, nw, lo, b, q);
        if (!o.converged) throw QuadratureFailure("spectrogram row did not converge", 0.0, o.error);
        for (std::size_t j = 0; j < nw; ++j) F[j] += o.value[j];
      }
      for (std::size_t j = 0; j < nw; ++j)
        g.values[i * nw + j] = kSpectrogramNorm * std::norm(F[j] * kInvSqrt2Pi);
    } catch (const std::exception&) {
      for (std::size_t j = 0; j < nw; ++j) {
        g.values[i * nw + j] = 0.0;
        g.failed[i * nw + j] = 1;
      }
    }
  });
  return g;
}

std::optional<double> zero_time(const SourceParams& src, double x, double T, int n) {
  const double T0 = 2.0 * kPi / std::abs(src.Omega0());
  const double r = n * T0 / T - 1.0;
  if (!(r > 0.0)) return std::nullopt;
  return src.tau(x) / std::sqrt(r);
}

FrequencyCut signal_frequency_cut(const SourceParams& src, double x, double T,
                                  const std::vector<double>& t_axis) {
  if (!(T > 0.0) || !(x > 0.0))
    throw Error(ErrorKind::invalid_parameter, "signal_frequency_cut needs T, x > 0");
  FrequencyCut c;
  c.t_axis = t_axis;
  const double tau = src.tau(x);
  const double T0 = 2.0 * kPi / std::abs(src.Omega0());
  for (double t : t_axis) {
    c.S.push_back(saddle_spectrogram(src, x, t, src.omega0, T));
    c.envelope.push_back(t > 0.0 ? beta(src, x, t) : 0.0);
  }
  if (!t_axis.empty()) {
    const double lo = t_axis.front(), hi = t_axis.back();
    const int n0 = static_cast<int>(std::floor(T / T0)) + 1;
    for (int n = n0; n < n0 + 100000; ++n) {
      auto tn = zero_time(src, x, T, n);
      if (!tn) continue;
      if (*tn < lo) break;
      if (*tn <= hi) {
        c.zeros.insert(c.zeros.begin(), *tn);
        c.zero_index.insert(c.zero_index.begin(), n);
      }
    }
  }
  for (int n = static_cast<int>(std::floor(T / T0)) + 1; n < 2.0 * T / T0; ++n)
    if (auto tn = zero_time(src, x, T, n); tn && *tn > tau) ++c.zeros_after_tau;

  auto neg = [&](double t) { return -beta(src, x, t); };
  auto m = boost::math::tools::brent_find_minima(neg, 0.1 * tau, 10.0 * tau, 52);
  c.envelope_peak = m.first;
  c.envelope_peak_formula = std::sqrt(5.0 / 3.0) * tau;

  std::vector<double> lx, ly, hx, hy;
  for (int k = 0; k <= 10; ++k) {
    const double ts = tau * std::pow(10.0, -3.0 + 0.1 * k);
    const double tl = tau * std::pow(10.0, 3.0 + 0.1 * k);
    lx.push_back(std::log(ts));
    ly.push_back(std::log(beta(src, x, ts)));
    hx.push_back(std::log(tl));
    hy.push_back(std::log(beta(src, x, tl)));
  }
  c.growth_exponent = fit_slope(lx, ly);
  c.decay_exponent = fit_slope(hx, hy);
  // windows quoted to four digits still count as T0
  c.single_bump = T < 1.01 * T0;
  if (c.single_bump) c.note = "T <= T0: a single major bump close to tau";
  return c;
}

FreqWindowTrace freq_window_spectrogram(const BandParams& band, double x,
                                        const std::vector<double>& t_axis, unsigned threads) {
  FreqWindowTrace r;
  r.t_axis = t_axis;
  r.S_prime.assign(t_axis.size(), 0.0);
  r.failed.assign(t_axis.size(), 0);
  parallel_for(t_axis.size(), threads, [&](std::size_t i) {
    try {
      r.S_prime[i] = kSpectrogramNorm * std::norm(psi_band(band, x, t_axis[i]));
    } catch (const std::exception&) {
      r.failed[i] = 1;
    }
  });
  return r;
}

}  // namespace evanescent
