#include "evanescent/oracle.hpp"

#include <cmath>
#include <limits>

#include "evanescent/error.hpp"

namespace evanescent::oracle {

namespace {

constexpr double xk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double wk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980223551, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double wg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Rule {
  cplx k, g;
};

Rule gk21(const std::function<cplx(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const cplx fc = f(c);
  cplx k = wk[10] * fc;
  cplx g = 0.0;
  for (int j = 0; j < 10; ++j) {
    const cplx s = f(c - h * xk[j]) + f(c + h * xk[j]);
    k += wk[j] * s;
    if (j % 2 == 1) g += wg[j / 2] * s;
  }
  return {h * k, h * g};
}

struct Acc {
  cplx sum;
  double err = 0.0;
  long evals = 0;
  bool failed = false;
};

void recurse(const std::function<cplx(double)>& f, double a, double b, double tol, int depth,
             int max_depth, Acc& acc) {
  const Rule r = gk21(f, a, b);
  acc.evals += 21;
  const double e = std::abs(r.k - r.g);
  const double mid = 0.5 * (a + b);
  // below this the estimate is rounding noise
  const double floor = 100.0 * std::numeric_limits<double>::epsilon() * std::abs(r.k);
  if (e <= std::max(tol, floor) || depth >= max_depth || !(mid > a && mid < b)) {
    if (e > std::max(tol, floor)) acc.failed = true;
    acc.sum += r.k;
    acc.err += e;
    return;
  }
  recurse(f, a, mid, 0.5 * tol, depth + 1, max_depth, acc);
  recurse(f, mid, b, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

QuadResult adaptive_quad(const std::function<cplx(double)>& f, double a, double b, double tol,
                         int max_depth) {
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_parameter, "adaptive_quad: tol must be > 0");
  if (a == b) return {};
  if (a > b) {
    QuadResult r = adaptive_quad(f, b, a, tol, max_depth);
    r.value = -r.value;
    return r;
  }
  const bool lo_inf = std::isinf(a);
  const bool hi_inf = std::isinf(b);
  std::function<cplx(double)> g;
  double lo = a, hi = b;
  if (lo_inf && hi_inf) {
    g = [&f](double s) {
      const double d = 1.0 - s * s;
      return f(s / d) * ((1.0 + s * s) / (d * d));
    };
    lo = -1.0;
    hi = 1.0;
  } else if (hi_inf) {
    g = [&f, a](double s) {
      const double d = 1.0 - s;
      return f(a + s / d) / (d * d);
    };
    lo = 0.0;
    hi = 1.0;
  } else if (lo_inf) {
    g = [&f, b](double s) {
      const double d = 1.0 - s;
      return f(b - s / d) / (d * d);
    };
    lo = 0.0;
    hi = 1.0;
  } else {
    g = f;
  }
  Acc acc;
  recurse(g, lo, hi, tol, 0, max_depth, acc);
  if (acc.failed)
    throw QuadratureFailure("adaptive_quad: depth limit reached", acc.sum, acc.err);
  return {acc.sum, acc.err, acc.evals};
}

QuadResult adaptive_pv(const std::function<cplx(double)>& f, double a, double b, double pole,
                       double tol) {
  if (!(a < pole && pole < b)) throw Error(ErrorKind::domain, "adaptive_pv: pole not inside (a, b)");
  const double r = std::min(pole - a, b - pole);
  QuadResult folded = adaptive_quad(
      [&f, pole](double u) { return (f(pole + u) - f(pole - u)) / u; }, 0.0, r, 0.5 * tol);
  QuadResult rest;
  if (pole + r < b)
    rest = adaptive_quad([&f, pole](double u) { return f(u) / (u - pole); }, pole + r, b, 0.5 * tol);
  else if (pole - r > a)
    rest = adaptive_quad([&f, pole](double u) { return f(u) / (u - pole); }, a, pole - r, 0.5 * tol);
  return {folded.value + rest.value, folded.abs_error_estimate + rest.abs_error_estimate,
          folded.evaluations + rest.evaluations};
}

namespace {
// e^{-u^2} < 1e-18 beyond this
const double kGaussCut = std::sqrt(18.0 * std::log(10.0)) + 0.1;
}  // namespace

cplx faddeeva_oracle(cplx z, double tol) {
  if (!(z.imag() > 0.0)) throw Error(ErrorKind::domain, "faddeeva_oracle needs Im z > 0");
  const double L = std::max(kGaussCut, std::abs(z.real()) + kGaussCut);
  auto f = [z](double u) { return std::exp(-u * u) / (u - z); };
  // split at Re z so the narrow Lorentzian peak is a breakpoint
  const double xr = std::clamp(z.real(), -L, L);
  cplx s = adaptive_quad(f, -L, xr, tol).value + adaptive_quad(f, xr, L, tol).value;
  return s / cplx(0.0, kPi);
}

cplx faddeeva_oracle_any(cplx z, double tol) {
  if (z.imag() > 0.0) return faddeeva_oracle(z, tol);
  if (z.imag() < 0.0) return 2.0 * std::exp(-z * z) - faddeeva_oracle(-z, tol);
  const double x = z.real();
  const double L = std::abs(x) + kGaussCut;
  QuadResult pv = adaptive_pv([](double u) { return cplx(std::exp(-u * u), 0.0); }, -L, L, x, tol);
  return std::exp(-x * x) + pv.value / cplx(0.0, kPi);
}

cplx psi_exact_oracle(const SourceParams& src, double x, double t) {
  if (t <= 0.0) return 0.0;
  const cplx eipi4(std::sqrt(0.5), std::sqrt(0.5));
  const double tau = x / (2.0 * src.kappa0);
  const double st = std::sqrt(t);
  const cplx u1 = eipi4 * st * src.kappa0 * cplx(-tau / t, -1.0);
  const cplx u2 = eipi4 * st * src.kappa0 * cplx(-tau / t, 1.0);
  const cplx ph = std::exp(cplx(0.0, -t + x * x / (4.0 * t)));
  return 0.5 * ph * (faddeeva_oracle_any(-u1) + faddeeva_oracle_any(-u2));
}

cplx psi_band_oracle(const BandParams& band, double x, double t, double rel_tol) {
  const double O0 = band.omega0 - 1.0;
  const double dw = band.delta_omega;
  const double kp = band.kappa_plus;
  // g(O0 + u) / g(O0) - 1 without cancellation for small u
  const double a0 = -O0;
  auto cexpm1 = [](cplx z) {
    const double s = std::sin(0.5 * z.imag());
    return cplx(std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * s * s,
                std::exp(z.real()) * std::sin(z.imag()));
  };
  auto dA = [x, t, a0](double u) {
    return cplx(u * x / (std::sqrt(a0 - u) + std::sqrt(a0)), -u * t);
  };
  const cplx g0 = std::exp(cplx(-(std::sqrt(a0) - kp) * x, -O0 * t));
  auto folded = [&](double u) { return g0 * (cexpm1(dA(u)) - cexpm1(dA(-u))) / u; };
  // breakpoints every half oscillation keep the local rule honest
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(t) * dw / kPi)));
  const double mag = std::max(std::abs(folded(0.5 * dw)), std::abs(folded(1e-3 * dw))) * dw;
  cplx pv = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double a = dw * i / pieces;
    const double b = dw * (i + 1) / pieces;
    pv += adaptive_quad(folded, a, b, rel_tol * mag / pieces).value;
  }
  const double scale = std::exp(-kp * x);
  const cplx pref = cplx(0.0, 1.0) * std::exp(cplx(0.0, -t)) / (2.0 * kPi);
  const cplx half_res = 0.5 * std::exp(cplx(-band.kappa0 * x, -band.omega0 * t));
  return pref * pv * scale + half_res;
}

cplx pv_oscillatory_oracle(double a, double b, double tol) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::domain, "pv_oscillatory_oracle needs a, b > 0");
  auto f = [](double y) { return std::exp(cplx(0.0, -y)); };
  return adaptive_pv(f, -b, a, 0.0, tol).value;
}

}  // namespace evanescent::oracle
