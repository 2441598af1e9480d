#include "evanescent/special_fn.hpp"

#include <cmath>
#include <limits>

#include "evanescent/error.hpp"

namespace evanescent {

namespace {

constexpr double kTwoOverSqrtPi = 1.12837916709551257388;
constexpr double kSqrtPi = 1.77245385090551602730;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kMaxExp = 708.5;

// Gautschi's evaluation in the first quadrant; returns w(|x| + i|y|) and leaves
// exp(-z^2) in (u2, v2) when the Taylor branch was taken.
struct QuadrantW {
  double u, v;
  bool taylor;
  double u2, v2;
};

QuadrantW w_first_quadrant(double xabs, double yabs) {
  const double xs = xabs / 6.3;
  const double ys = yabs / 4.4;
  double qrho = xs * xs + ys * ys;
  const double xquad = xabs * xabs - yabs * yabs;
  const double yquad = 2.0 * xabs * yabs;
  QuadrantW r{0.0, 0.0, false, 0.0, 0.0};

  if (qrho < 0.085264) {
    r.taylor = true;
    qrho = (1.0 - 0.85 * ys) * std::sqrt(qrho);
    const int n = static_cast<int>(std::lround(6.0 + 72.0 * qrho));
    int j = 2 * n + 1;
    double xsum = 1.0 / j;
    double ysum = 0.0;
    for (int i = n; i >= 1; --i) {
      j -= 2;
      const double xaux = (xsum * xquad - ysum * yquad) / i;
      ysum = (xsum * yquad + ysum * xquad) / i;
      xsum = xaux + 1.0 / j;
    }
    const double u1 = -kTwoOverSqrtPi * (xsum * yabs + ysum * xabs) + 1.0;
    const double v1 = kTwoOverSqrtPi * (xsum * xabs - ysum * yabs);
    const double daux = std::exp(-xquad);
    r.u2 = daux * std::cos(yquad);
    r.v2 = -daux * std::sin(yquad);
    r.u = u1 * r.u2 - v1 * r.v2;
    r.v = u1 * r.v2 + v1 * r.u2;
    return r;
  }

  double h = 0.0;
  double h2 = 0.0;
  int kapn = 0;
  int nu = 0;
  if (qrho > 1.0) {
    qrho = std::sqrt(qrho);
    nu = static_cast<int>(3.0 + 1442.0 / (26.0 * qrho + 77.0));
  } else {
    qrho = (1.0 - ys) * std::sqrt(1.0 - qrho);
    h = 1.88 * qrho;
    h2 = 2.0 * h;
    kapn = static_cast<int>(std::lround(7.0 + 34.0 * qrho));
    nu = static_cast<int>(std::lround(16.0 + 26.0 * qrho));
  }
  const bool truncated = h > 0.0;
  double qlambda = truncated ? std::pow(h2, kapn) : 0.0;

  double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
  for (int n = nu; n >= 0; --n) {
    const double np1 = n + 1;
    double tx = yabs + h + np1 * rx;
    const double ty = xabs - np1 * ry;
    const double c = 0.5 / (tx * tx + ty * ty);
    rx = c * tx;
    ry = c * ty;
    if (truncated && n <= kapn) {
      tx = qlambda + sx;
      sx = rx * tx - ry * sy;
      sy = ry * tx + rx * sy;
      qlambda /= h2;
    }
  }
  if (truncated) {
    r.u = kTwoOverSqrtPi * sx;
    r.v = kTwoOverSqrtPi * sy;
  } else {
    r.u = kTwoOverSqrtPi * rx;
    r.v = kTwoOverSqrtPi * ry;
  }
  if (yabs == 0.0) r.u = std::exp(-xabs * xabs);
  return r;
}

}  // namespace

cplx faddeeva_w(cplx z) {
  const double xi = z.real();
  const double yi = z.imag();
  if (!std::isfinite(xi) || !std::isfinite(yi))
    throw Error(ErrorKind::domain, "faddeeva_w: non-finite argument");
  const double xabs = std::abs(xi);
  const double yabs = std::abs(yi);
  QuadrantW q = w_first_quadrant(xabs, yabs);
  double u = q.u;
  double v = q.v;

  if (yi < 0.0) {
    const double xquad = yabs * yabs - xabs * xabs;
    if (xquad > kMaxExp) throw Error(ErrorKind::overflow, "faddeeva_w: exp(-z^2) overflows");
    double u2, v2;
    if (q.taylor) {
      u2 = 2.0 * q.u2;
      v2 = 2.0 * q.v2;
    } else {
      const double yquad = 2.0 * xabs * yabs;
      const double w1 = 2.0 * std::exp(xquad);
      u2 = w1 * std::cos(yquad);
      v2 = -w1 * std::sin(yquad);
    }
    u = u2 - u;
    v = v2 - v;
    if (xi > 0.0) v = -v;
  } else if (xi < 0.0) {
    v = -v;
  }
  return {u, v};
}

AsymptoticSeriesResult faddeeva_w_asymptotic(cplx z, int max_terms) {
  if (std::abs(z) <= 2.0) throw Error(ErrorKind::domain, "asymptotic series needs |z| > 2");
  if (max_terms < 1) throw Error(ErrorKind::invalid_parameter, "max_terms must be >= 1");
  const cplx inv2z2 = 1.0 / (2.0 * z * z);
  cplx sum = 1.0;
  cplx term = 1.0;
  int used = 1;
  double omitted = 0.0;
  for (int m = 1;; ++m) {
    const cplx next = term * (2.0 * m - 1.0) * inv2z2;
    if (used >= max_terms || std::abs(next) >= std::abs(term)) {
      omitted = std::abs(next);
      break;
    }
    term = next;
    sum += term;
    ++used;
  }
  const cplx pref = cplx(0.0, 1.0) / (kSqrtPi * z);
  AsymptoticSeriesResult r;
  r.value = pref * sum;
  r.terms_used = used;
  r.estimated_error = omitted * std::abs(pref);
  if (z.imag() <= 0.0) {
    const cplx mz2 = -z * z;
    if (mz2.real() > kMaxExp) throw Error(ErrorKind::overflow, "asymptotic w: exp(-z^2) overflows");
    r.value += (z.imag() < 0.0 ? 2.0 : 1.0) * std::exp(mz2);
  }
  return r;
}

namespace {

cplx e1_series(cplx z) {
  cplx sum = 0.0;
  cplx term = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= -z / static_cast<double>(k);
    const cplx add = term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(z) - sum;
}

// e^{-z}/(z + 1 - 1/(z + 3 - 4/(z + 5 - ...))) by modified Lentz.
cplx e1_continued_fraction(cplx z) {
  constexpr double tiny = 1e-300;
  cplx b = z + 1.0;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-z);
  }
  throw Error(ErrorKind::computation, "E1 continued fraction did not converge");
}

}  // namespace

cplx exp_integral_e1(cplx z) {
  if (z == cplx(0.0, 0.0)) throw Error(ErrorKind::singularity, "E1 is singular at z = 0");
  if (z.imag() == 0.0 && z.real() < 0.0)
    throw Error(ErrorKind::branch_cut, "E1 evaluated on its branch cut arg z = pi");
  const double r = std::abs(z);
  // near the negative axis the series keeps full accuracy and the fraction crawls
  const bool near_cut = z.real() < 0.0 && std::abs(z.imag()) < 2.0 && r < 40.0;
  if (r <= 4.0 || near_cut) return e1_series(z);
  return e1_continued_fraction(z);
}

cplx pv_oscillatory(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::domain, "pv_oscillatory needs a, b > 0");
  return exp_integral_e1(cplx(0.0, -b)) - exp_integral_e1(cplx(0.0, a)) - cplx(0.0, kPi);
}

cplx gaussian_pole_integral(double a, double b, cplx k0) {
  if (!(a > 0.0)) throw Error(ErrorKind::invalid_parameter, "gaussian_pole_integral needs a > 0");
  const cplx eipi4(std::sqrt(0.5), std::sqrt(0.5));
  const cplx u0 = eipi4 * std::sqrt(a) * (k0 + b / (2.0 * a));
  const cplx phase = std::exp(cplx(0.0, b * b / (4.0 * a)));
  return cplx(0.0, -kPi) * phase * faddeeva_w(-u0);
}

}  // namespace evanescent
