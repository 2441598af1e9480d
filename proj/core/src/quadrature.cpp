#include "evanescent/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace evanescent::quad {

namespace {

constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double norm(const cplx& v) { return std::abs(v); }
double norm(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

struct ScalarOps {
  using value_type = cplx;
  const std::function<cplx(double)>* f;
  value_type zero() const { return {}; }
  void eval(double x, value_type& out) const { out = (*f)(x); }
  static void axpy(value_type& acc, double w, const value_type& v) { acc += w * v; }
  static void add(value_type& acc, const value_type& v) { acc += v; }
  static void sub(value_type& acc, const value_type& v) { acc -= v; }
  static value_type diff(const value_type& a, const value_type& b) { return a - b; }
};

struct VectorOps {
  using value_type = std::vector<cplx>;
  const std::function<void(double, std::vector<cplx>&)>* f;
  std::size_t dim;
  value_type zero() const { return value_type(dim); }
  void eval(double x, value_type& out) const { (*f)(x, out); }
  static void axpy(value_type& acc, double w, const value_type& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * v[i];
  }
  static void add(value_type& acc, const value_type& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
  }
  static void sub(value_type& acc, const value_type& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= v[i];
  }
  static value_type diff(const value_type& a, const value_type& b) {
    value_type d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
  }
};

template <class Ops>
struct Segment {
  double a, b;
  typename Ops::value_type value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class Ops>
Segment<Ops> gk15(const Ops& ops, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  auto k = ops.zero();
  auto g = ops.zero();
  auto f1 = ops.zero();
  auto f2 = ops.zero();
  ops.eval(c, f1);
  Ops::axpy(k, wgk[7], f1);
  Ops::axpy(g, wg[3], f1);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    ops.eval(c - dx, f1);
    ops.eval(c + dx, f2);
    Ops::axpy(k, wgk[j], f1);
    Ops::axpy(k, wgk[j], f2);
    if (j % 2 == 1) {
      Ops::axpy(g, wg[j / 2], f1);
      Ops::axpy(g, wg[j / 2], f2);
    }
  }
  auto scaled_k = ops.zero();
  Ops::axpy(scaled_k, h, k);
  auto scaled_g = ops.zero();
  Ops::axpy(scaled_g, h, g);
  const double err = norm(Ops::diff(scaled_k, scaled_g));
  return {a, b, std::move(scaled_k), err};
}

template <class Ops>
void run(const Ops& ops, double a, double b, const Options& opt,
         typename Ops::value_type& value, double& error, int& evals, bool& converged) {
  std::priority_queue<Segment<Ops>> heap;
  value = ops.zero();
  error = 0.0;
  evals = 0;
  converged = false;
  if (a == b) {
    converged = true;
    return;
  }
  auto first = gk15(ops, a, b);
  evals += 15;
  Ops::add(value, first.value);
  error = first.error;
  heap.push(std::move(first));
  int intervals = 1;
  while (true) {
    if (error <= std::max(opt.abs_tol, opt.rel_tol * norm(value))) {
      converged = true;
      break;
    }
    if (intervals >= opt.max_intervals) break;
    Segment<Ops> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(std::move(worst));
      break;
    }
    auto left = gk15(ops, worst.a, mid);
    auto right = gk15(ops, mid, worst.b);
    evals += 30;
    Ops::sub(value, worst.value);
    Ops::add(value, left.value);
    Ops::add(value, right.value);
    error += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
    ++intervals;
    // recompute occasionally to stop drift in the running sum of errors
    if (intervals % 64 == 0) {
      auto copy = heap;
      double e = 0.0;
      while (!copy.empty()) {
        e += copy.top().error;
        copy.pop();
      }
      error = e;
    }
  }
}

}  // namespace

Outcome integrate(const std::function<cplx(double)>& f, double a, double b, const Options& opt) {
  ScalarOps ops{&f};
  Outcome out;
  run(ops, a, b, opt, out.value, out.error, out.evaluations, out.converged);
  return out;
}

VecOutcome integrate_vec(const std::function<void(double, std::vector<cplx>&)>& f,
                         std::size_t dim, double a, double b, const Options& opt) {
  VectorOps ops{&f, dim};
  VecOutcome out;
  run(ops, a, b, opt, out.value, out.error, out.evaluations, out.converged);
  return out;
}

}  // namespace evanescent::quad
