#include "evanescent/band_source.hpp"

#include <cmath>

#include "evanescent/error.hpp"
#include "evanescent/oracle.hpp"
#include "evanescent/quadrature.hpp"
#include "evanescent/special_fn.hpp"

namespace evanescent {

BandParams BandParams::make(double omega0, double delta_omega) {
  if (!(omega0 < 1.0)) throw Error(ErrorKind::invalid_parameter, "band: omega0 must be < 1");
  if (!(delta_omega > 0.0)) throw Error(ErrorKind::invalid_parameter, "band: delta_omega must be > 0");
  if (!(omega0 + delta_omega < 1.0))
    throw Error(ErrorKind::invalid_parameter, "band: omega0 + delta_omega must stay below 1");
  BandParams b;
  b.omega0 = omega0;
  b.delta_omega = delta_omega;
  b.omega_plus = omega0 + delta_omega;
  b.omega_minus = omega0 - delta_omega;
  b.kappa0 = std::sqrt(1.0 - omega0);
  b.kappa_plus = std::sqrt(1.0 - b.omega_plus);
  b.kappa_minus = std::sqrt(1.0 - b.omega_minus);
  return b;
}

cplx band_source_signal(const BandParams& band, double t) {
  if (t == 0.0) return 0.5;
  const double step = t > 0.0 ? 1.0 : 0.0;
  const double im_e1 = exp_integral_e1(cplx(0.0, -band.delta_omega * t)).imag();
  return std::exp(cplx(0.0, -band.omega0 * t)) * (step - im_e1 / kPi);
}

namespace {

cplx path_p(cplx pz2, int sigma, double u) {
  return -std::sqrt(pz2 - cplx(0.0, sigma * u));
}

}  // namespace

double endpoint_angle(double z, int sign_t) {
  return kPi + std::atan(sign_t * std::sqrt(-z));
}

std::vector<PathPoint> endpoint_path(double z, int sign_t, double arc_limit, double max_turn) {
  if (!(z < 0.0)) throw Error(ErrorKind::domain, "endpoint_path: endpoint must be negative");
  if (sign_t != 1 && sign_t != -1) throw Error(ErrorKind::invalid_parameter, "sign_t must be +-1");
  if (!(arc_limit > 0.0)) throw Error(ErrorKind::invalid_parameter, "arc_limit must be > 0");
  const cplx pz(-1.0, sign_t * std::sqrt(-z));
  const cplx pz2 = pz * pz;
  auto point = [&](double u) {
    const cplx q = 1.0 + path_p(pz2, sign_t, u);
    return PathPoint{q * q, q, u};
  };
  std::vector<PathPoint> pts{point(0.0)};
  const double max_seg = arc_limit / 200.0;
  double du = 1e-4 * (1.0 + std::abs(z));
  double arc = 0.0;
  cplx prev_dir = 0.0;
  while (arc < arc_limit) {
    const PathPoint& last = pts.back();
    PathPoint next = point(last.u + du);
    cplx seg = next.y - last.y;
    double len = std::abs(seg);
    double turn = prev_dir == cplx(0.0) ? 0.0 : std::abs(std::arg(seg / prev_dir));
    if (turn > max_turn || len > max_seg) {
      du *= 0.5;
      if (du < 1e-14 * (1.0 + last.u))
        throw Error(ErrorKind::path_degenerate, "endpoint_path: step size underflow");
      continue;
    }
    arc += len;
    prev_dir = seg / len;
    pts.push_back(next);
    if (turn < 0.25 * max_turn && len < 0.5 * max_seg) du *= 2.0;
  }
  return pts;
}

double EndpointContribution::relative_correction() const {
  return std::abs(scaled_numeric - scaled_leading) / std::abs(scaled_numeric);
}

EndpointContribution endpoint_contribution(const BandParams& band, Endpoint endpoint, double x,
                                           double t) {
  if (!(x > 0.0)) throw Error(ErrorKind::invalid_parameter, "endpoint_contribution needs x > 0");
  if (t == 0.0) throw Error(ErrorKind::domain, "endpoint_contribution undefined at t = 0");
  const int sigma = t > 0.0 ? 1 : -1;
  const double Omega0 = band.omega0 - 1.0;
  const double Omega_z =
      endpoint == Endpoint::upper ? Omega0 + band.delta_omega : Omega0 - band.delta_omega;
  const double kappa_z = endpoint == Endpoint::upper ? band.kappa_plus : band.kappa_minus;
  const double Omega_s = x * x / (4.0 * t * t);
  const double lambda = x * x / (4.0 * std::abs(t));
  const double z = Omega_z / Omega_s;
  const double y0 = Omega0 / Omega_s;

  EndpointContribution r;
  r.endpoint = endpoint;
  r.z = z;
  r.lambda = lambda;
  r.t_crit = x / (2.0 * kappa_z);
  r.theta_z = endpoint_angle(z, sigma);
  r.near_pole = std::abs(t) < 2.0 * kPi / band.delta_omega;

  const cplx pz(-1.0, sigma * std::sqrt(-z));
  const cplx pz2 = pz * pz;
  const cplx mis(0.0, -static_cast<double>(sigma));
  auto rational = [&](cplx p) {
    const cplx q = 1.0 + p;
    return mis * q / (lambda * p * (q * q - y0));
  };
  r.scaled_leading = rational(pz);
  auto integrand = [&](double s) { return std::exp(-s) * rational(path_p(pz2, sigma, s / lambda)); };
  quad::Options opt;
  opt.abs_tol = 1e-16 * std::abs(r.scaled_leading);
  opt.rel_tol = 1e-13;
  // e^{-46} is below 1e-20: the tail is invisible at double precision
  quad::Outcome o = quad::integrate(integrand, 0.0, 46.0, opt);
  r.scaled_numeric = o.value;
  r.converged = o.converged;

  const cplx pref = cplx(0.0, 1.0) * std::exp(cplx(-kappa_z * x, -t - Omega_z * t)) / (2.0 * kPi);
  r.value_numeric = pref * r.scaled_numeric;
  r.value_leading = pref * r.scaled_leading;
  return r;
}

BandWave psi_band_detailed(const BandParams& band, double x, double t) {
  if (!(x >= 0.0)) throw Error(ErrorKind::invalid_parameter, "psi_band needs x >= 0");
  BandWave w;
  if (x == 0.0) {
    w.psi = band_source_signal(band, t);
    return w;
  }
  w.near_pole = std::abs(t) < 2.0 * kPi / band.delta_omega;
  auto use_oracle = [&]() {
    try {
      w.psi = oracle::psi_band_oracle(band, x, t);
      w.used_oracle = true;
    } catch (const std::exception& e) {
      throw Error(ErrorKind::computation,
                  std::string("psi_band: path integral and oracle both failed: ") + e.what());
    }
  };
  if (t == 0.0) {
    use_oracle();
    return w;
  }
  EndpointContribution lo, hi;
  try {
    lo = endpoint_contribution(band, Endpoint::lower, x, t);
    hi = endpoint_contribution(band, Endpoint::upper, x, t);
  } catch (const Error&) {
    use_oracle();
    return w;
  }
  if (!lo.converged || !hi.converged) {
    use_oracle();
    return w;
  }
  w.d_minus = lo.value_numeric;
  w.d_plus = hi.value_numeric;
  if (t > 0.0) w.residue = std::exp(cplx(-band.kappa0 * x, -band.omega0 * t));
  w.psi = w.d_minus - w.d_plus + w.residue;
  return w;
}

cplx psi_band(const BandParams& band, double x, double t) {
  return psi_band_detailed(band, x, t).psi;
}

double BandCharacteristics::r_prime(double t) const {
  return std::exp((kappa_plus - kappa0) * x) * 2.0 * kPi * delta_omega *
         std::sqrt(t * t + t_plus * t_plus);
}

double BandCharacteristics::v_tr_prime(double t) const {
  return 1.0 / (t * (kappa0 - kappa_plus));
}

const char* BandCharacteristics::absent_note() const {
  return t_tr_exact ? "" : "t'_tr is imaginary: the stationary term dominates from the start";
}

BandCharacteristics band_characteristics(const BandParams& band, double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::invalid_parameter, "band_characteristics needs x > 0");
  BandCharacteristics c;
  c.x = x;
  c.kappa0 = band.kappa0;
  c.kappa_plus = band.kappa_plus;
  c.delta_omega = band.delta_omega;
  c.tau = x / (2.0 * band.kappa0);
  c.t_plus = x / (2.0 * band.kappa_plus);
  c.t_minus = x / (2.0 * band.kappa_minus);
  const double dw = band.delta_omega;
  const double gap = x * (band.kappa0 - band.kappa_plus);
  c.radicand = std::exp(2.0 * gap) / (4.0 * kPi * kPi * dw * dw) - c.t_plus * c.t_plus;
  if (c.radicand >= 0.0) c.t_tr_exact = std::sqrt(c.radicand);
  c.t_tr_approx = std::exp(gap) / (2.0 * kPi * dw);
  c.fast_onset_ratio = dw * c.tau / (2.0 * kPi);
  c.evanescent_ratio = band.kappa0 * band.kappa0 / dw;
  c.fast_onset_ok = c.fast_onset_ratio > 1.0;
  c.evanescent_ok = c.evanescent_ratio > 1.0;
  return c;
}

}  // namespace evanescent
