#include "evanescent/sharp_source.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>

#include "evanescent/error.hpp"
#include "evanescent/parallel.hpp"
#include "evanescent/special_fn.hpp"

namespace evanescent {

namespace {

const cplx kEipi4(std::sqrt(0.5), std::sqrt(0.5));
constexpr double kSqrtPi = 1.77245385090551602730;

void check_x(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorKind::invalid_parameter, "x must be >= 0");
}

struct UArgs {
  cplx u1, u2;
};

UArgs u_args(const SourceParams& src, double x, double t) {
  const double tau = src.tau(x);
  const double s = std::sqrt(t) * src.kappa0;
  return {kEipi4 * s * cplx(-tau / t, -1.0), kEipi4 * s * cplx(-tau / t, 1.0)};
}

cplx carrier(double x, double t) { return std::exp(cplx(0.0, -t + x * x / (4.0 * t))); }

}  // namespace

cplx psi_exact(const SourceParams& src, double x, double t) {
  check_x(x);
  if (t <= 0.0) return 0.0;
  if (x == 0.0) return std::exp(cplx(0.0, -src.omega0 * t));
  const UArgs u = u_args(src, x, t);
  return 0.5 * carrier(x, t) * (faddeeva_w(-u.u1) + faddeeva_w(-u.u2));
}

cplx psi_saddle(const SourceParams& src, double x, double t) {
  check_x(x);
  if (t <= 0.0) return 0.0;
  const UArgs u = u_args(src, x, t);
  return carrier(x, t) / cplx(0.0, 2.0 * kSqrtPi) * (1.0 / u.u1 + 1.0 / u.u2);
}

cplx psi_pole(const SourceParams& src, double x, double t) {
  check_x(x);
  const double tau = src.tau(x);
  if (t < tau) return 0.0;
  const double step = t == tau ? 0.5 : 1.0;
  return step * std::exp(cplx(-src.kappa0 * x, -src.omega0 * t));
}

double ratio_R(const SourceParams& src, double x, double t) {
  if (!(x > 0.0) || !(t > 0.0)) throw Error(ErrorKind::invalid_parameter, "ratio_R needs x, t > 0");
  const double k0 = src.kappa0;
  return 2.0 * kSqrtPi / x * std::exp(-k0 * x) * std::pow(t, 1.5) *
         (x * x / (4.0 * t * t) + k0 * k0);
}

double argument_modulus(const SourceParams& src, double x, double t) {
  const double tau = src.tau(x);
  return src.kappa0 * std::sqrt(t * t + tau * tau) / std::sqrt(t);
}

SharpWaveDecomposition decompose(const SourceParams& src, double x, double t) {
  if (!(x > 0.0) || !(t > 0.0)) throw Error(ErrorKind::invalid_parameter, "decompose needs x, t > 0");
  SharpWaveDecomposition d;
  const UArgs u = u_args(src, x, t);
  d.u0_prime = u.u1;
  d.u0_doubleprime = u.u2;
  d.psi_exact = psi_exact(src, x, t);
  d.psi_saddle = psi_saddle(src, x, t);
  d.psi_pole = psi_pole(src, x, t);
  d.psi_approx = d.psi_saddle + d.psi_pole;
  d.ratio_R = ratio_R(src, x, t);
  return d;
}

TransitionTime transition_time(const SourceParams& src, double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::invalid_parameter, "transition_time needs x > 0");
  const double k0 = src.kappa0;
  if (!(k0 * x > 1.0))
    throw Error(ErrorKind::invalid_parameter, "transition_time needs kappa0 x > 1");
  TransitionTime r;
  r.closed_form = std::pow(x * std::exp(k0 * x) / (2.0 * k0 * k0 * kSqrtPi), 2.0 / 3.0);
  const double tau = src.tau(x);
  auto g = [&](double t) { return std::log(ratio_R(src, x, t)); };
  if (g(tau) >= 0.0)
    throw Error(ErrorKind::no_transition, "R(tau) >= 1: the pole dominates from the start");
  double hi = 2.0 * tau;
  while (g(hi) < 0.0) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw Error(ErrorKind::no_transition, "R(t) = 1 has no root");
  }
  boost::uintmax_t iters = 200;
  auto tol = boost::math::tools::eps_tolerance<double>(50);
  auto br = boost::math::tools::toms748_solve(g, tau, hi, tol, iters);
  r.numeric_root = 0.5 * (br.first + br.second);
  r.v_tr = 3.0 / (2.0 * k0 * r.numeric_root);
  return r;
}

double avg_frequency(const SourceParams& src, double x, double t, double dt) {
  if (!(dt > 0.0) || !(t > dt)) throw Error(ErrorKind::invalid_parameter, "avg_frequency needs t > dt > 0");
  const cplx a = psi_exact(src, x, t - dt);
  const cplx b = psi_exact(src, x, t);
  const cplx c = psi_exact(src, x, t + dt);
  constexpr double floor = 1e-300;
  if (std::abs(a) < floor || std::abs(b) < floor || std::abs(c) < floor)
    throw Error(ErrorKind::undefined_phase, "|psi| vanishes on the stencil");
  const double d1 = std::arg(b / a);
  const double d2 = std::arg(c / b);
  return -(d1 + d2) / (2.0 * dt);
}

double frequency_step(double x, double t) {
  const double omega_s = 1.0 + x * x / (4.0 * t * t);
  return std::min(1e-3 * t, 0.02 / omega_s);
}

std::vector<TraceRow> trace(const SourceParams& src, double x, const std::vector<double>& t_grid,
                            unsigned threads) {
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw Error(ErrorKind::invalid_parameter, "trace: t grid must be strictly increasing");
  const double amp = src.amplification(x);
  std::vector<TraceRow> rows(t_grid.size());
  parallel_for(t_grid.size(), threads, [&](std::size_t i) {
    TraceRow& r = rows[i];
    r.x = x;
    r.t = t_grid[i];
    try {
      if (!(r.t > 0.0)) throw Error(ErrorKind::domain, "trace needs t > 0");
      const cplx p = psi_exact(src, x, r.t);
      r.re_psi = p.real();
      r.im_psi = p.imag();
      r.density = std::norm(p);
      r.amplified = r.density * amp;
      r.log10_A = std::log10(r.amplified);
    } catch (const std::exception& e) {
      r.ok = false;
      r.omega_bar_ok = false;
      r.error = e.what();
      r.log10_A = std::numeric_limits<double>::quiet_NaN();
      r.omega_bar = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    try {
      r.omega_bar = avg_frequency(src, x, r.t, frequency_step(x, r.t));
    } catch (const std::exception& e) {
      r.omega_bar_ok = false;
      r.error = e.what();
      r.omega_bar = std::numeric_limits<double>::quiet_NaN();
    }
  });
  return rows;
}

}  // namespace evanescent
