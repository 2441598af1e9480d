#include "evanescent/relativistic.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>

#include "evanescent/error.hpp"

namespace evanescent {

RelParams RelParams::make(double c, double omega0) {
  if (!(c > 0.0)) throw Error(ErrorKind::invalid_parameter, "c must be > 0");
  RelParams r;
  r.c = c;
  r.omega0 = omega0;
  r.Omega0 = omega0 - 1.0;
  const double half = 0.5 * c * c;
  if (!(std::abs(r.Omega0) < half))
    throw Error(ErrorKind::domain, "|Omega0| >= c^2/2: the source is propagating");
  r.kappa0 = std::sqrt(half * half - r.Omega0 * r.Omega0) / c;
  return r;
}

double RelParams::theta(double x, double t) const {
  const double d = t * t - x * x / (c * c);
  return d > 0.0 ? std::sqrt(d) : 0.0;
}

double RelParams::Omega_s(double x, double t) const {
  const double th = theta(x, t);
  if (!(th > 0.0)) throw Error(ErrorKind::domain, "saddle frequency undefined inside the light cone");
  return c * c * t / (2.0 * th);
}

KgScales kg_scales(const RelParams& rel, double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::invalid_parameter, "kg_scales needs x > 0");
  return {rel.tau(x), x / rel.c};
}

cplx psi_saddle_plus(const RelParams& rel, double x, double t) {
  if (!(t > x / rel.c)) return 0.0;
  const double c = rel.c;
  const double th = rel.theta(x, t);
  if (!(th > 0.0)) return 0.0;
  const double Os = c * c * t / (2.0 * th);
  const cplx root = std::sqrt(cplx(0.0, -1.0 / (kPi * th)));
  const double phase = -(t + 0.5 * c * std::sqrt(c * c * t * t - x * x));
  return cplx(0.0, x / (c * c * t)) * root * (Os / (Os + rel.Omega0)) *
         std::exp(cplx(0.0, phase));
}

namespace {

double rel_prefactor(const RelParams& rel, double x, double T, double t, double& Os) {
  const double c = rel.c;
  const double th = rel.theta(x, t);
  Os = c * c * t / (2.0 * th);
  const double g = Os / (Os + rel.Omega0);
  return 2.0 * x * x / (kPi * kPi * T * c * c * c * c * t * t * th) * g * g;
}

}  // namespace

double rel_spectrogram(const RelParams& rel, double x, double T, double t, double omega) {
  if (!(t > x / rel.c)) return 0.0;
  double Os = 0.0;
  const double pre = rel_prefactor(rel, x, T, t, Os);
  const double d = omega - 1.0 - Os;
  const double a = 0.5 * d * T;
  const double s = std::abs(a) < 1e-6 ? 0.5 * T * (1.0 - a * a / 6.0) : std::sin(a) / d;
  return pre * s * s;
}

double rel_envelope(const RelParams& rel, double x, double T, double t) {
  if (!(t > x / rel.c)) return 0.0;
  double Os = 0.0;
  const double pre = rel_prefactor(rel, x, T, t, Os);
  const double d = rel.Omega0 - Os;
  return pre / (d * d);
}

EnvelopePeak rel_envelope_peak(const RelParams& rel, double x, double T) {
  if (!(x > 0.0) || !(T > 0.0)) throw Error(ErrorKind::invalid_parameter, "needs x, T > 0");
  EnvelopePeak p;
  const double tau = rel.tau(x);
  const double r = rel.Omega0 * rel.Omega0 / (0.5 * rel.c * rel.c);
  p.t_en_formula = tau / std::sqrt(3.0) * std::sqrt(1.0 + 3.0 * r * r);
  p.lower_bound = tau / std::sqrt(3.0);
  p.upper_bound = 4.0 * tau / std::sqrt(3.0);
  p.search_lo = 0.5 * T + x / rel.c;
  p.search_hi = p.search_lo + 50.0 * tau;
  if (!(p.search_hi > p.search_lo)) throw Error(ErrorKind::domain, "empty envelope search interval");

  // coarse log-spaced scan, then Brent around the best sample
  const int n = 400;
  const double span = p.search_hi - p.search_lo;
  auto at = [&](int k) { return p.search_lo + span * (std::pow(1.0 + 1e4, double(k) / n) - 1.0) / 1e4; };
  int best = 0;
  double best_v = -1.0;
  for (int k = 0; k <= n; ++k) {
    const double v = rel_envelope(rel, x, T, at(k));
    if (v > best_v) {
      best_v = v;
      best = k;
    }
  }
  const double lo = at(std::max(best - 1, 0));
  const double hi = at(std::min(best + 1, n));
  auto neg = [&](double t) { return -rel_envelope(rel, x, T, t); };
  p.t_en_numeric = boost::math::tools::brent_find_minima(neg, lo, hi, 52).first;
  p.consistent = std::abs(p.t_en_formula - p.t_en_numeric) <= 0.05 * p.t_en_numeric;
  p.within_bounds = p.t_en_numeric > p.lower_bound && p.t_en_numeric < p.upper_bound;
  return p;
}

}  // namespace evanescent
