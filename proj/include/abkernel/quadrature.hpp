#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

#include "abkernel/errors.hpp"

namespace abk {

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre on [-1, 1].
const Rule& gauss_legendre(int n);

// Gauss-Laguerre for the weight u^a e^{-u} on [0, inf) (Golub-Welsch).
const Rule& gauss_laguerre(int n, double a);

// Composite Gauss-Legendre nodes/weights on [a, b] split at the given breaks.
Rule composite_gauss_legendre(const std::vector<double>& breaks, int order);

template <class T>
struct QuadResult {
  T value{};
  double abs_error = 0.0;
  int evaluations = 0;
};

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 20;
  int max_intervals = 20000;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T, class F>
void gk15(F& f, double a, double b, T& result, double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T fc = f(c);
  T rk = fc * kWgk[7];
  T rg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    T f1 = f(c - dx), f2 = f(c + dx);
    rk += (f1 + f2) * kWgk[j];
    if (j % 2 == 1) rg += (f1 + f2) * kWg[j / 2];
  }
  result = rk * h;
  err = std::abs((rk - rg) * h);
}

template <class T>
struct Interval {
  double a, b;
  T value;
  double err;
  int depth;
  bool operator<(const Interval& o) const { return err < o.err; }
};

} // namespace detail

// Globally adaptive Gauss-Kronrod (15-point) integration of f over [a, b]
// with initial breakpoints. T is double or std::complex<double>. Throws
// QuadratureError when an interval at max_depth still dominates the error.
template <class T, class F>
QuadResult<T> integrate_adaptive(F&& f, std::vector<double> breaks, const AdaptiveOptions& opt = {}) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  QuadResult<T> out;
  if (breaks.size() < 2) return out;
  std::priority_queue<detail::Interval<T>> heap;
  T total{};
  double total_err = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    detail::Interval<T> iv{breaks[i], breaks[i + 1], T{}, 0.0, 0};
    detail::gk15(f, iv.a, iv.b, iv.value, iv.err);
    out.evaluations += 15;
    total += iv.value;
    total_err += iv.err;
    heap.push(iv);
  }
  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
  int n_intervals = static_cast<int>(heap.size());
  while (total_err > target()) {
    detail::Interval<T> worst = heap.top();
    if (worst.depth >= opt.max_depth || n_intervals >= opt.max_intervals) {
      throw QuadratureError("adaptive quadrature exceeded refinement limit on [" + std::to_string(worst.a) +
                            ", " + std::to_string(worst.b) + "], error " + std::to_string(total_err));
    }
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    detail::Interval<T> l{worst.a, m, T{}, 0.0, worst.depth + 1};
    detail::Interval<T> r{m, worst.b, T{}, 0.0, worst.depth + 1};
    detail::gk15(f, l.a, l.b, l.value, l.err);
    detail::gk15(f, r.a, r.b, r.value, r.err);
    out.evaluations += 30;
    total += l.value + r.value - worst.value;
    total_err += l.err + r.err - worst.err;
    heap.push(l);
    heap.push(r);
    ++n_intervals;
  }
  // Re-sum to shed accumulated cancellation from the running updates.
  total = T{};
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().err;
    heap.pop();
  }
  out.value = total;
  out.abs_error = total_err;
  return out;
}

template <class T, class F>
QuadResult<T> integrate_adaptive(F&& f, double a, double b, const AdaptiveOptions& opt = {}) {
  return integrate_adaptive<T>(std::forward<F>(f), std::vector<double>{a, b}, opt);
}

// int_a^b g(s)/(s - p) ds for complex p close to the real segment, by
// subtracting g(p)/(s - p) and adding its integral in closed form. When p is
// exactly real the limit from Im p -> 0+ is taken.
template <class G>
QuadResult<std::complex<double>> integrate_with_pole(G&& g, std::complex<double> p, std::vector<double> breaks,
                                                     const AdaptiveOptions& opt = {}) {
  using C = std::complex<double>;
  const C gp = g(p);
  // Near p the difference quotient is taken from the Cauchy integral over a
  // fixed circle, which avoids the cancellation in (g(s) - g(p)) / (s - p).
  constexpr double kRadius = 0.05;
  constexpr int kNodes = 32;
  auto regular = [&](double s) -> C {
    const C d = C(s, 0.0) - p;
    if (std::abs(d) >= 0.25 * kRadius) return (g(C(s, 0.0)) - gp) / d;
    const C c = 0.5 * (C(s, 0.0) + p);
    C acc(0.0, 0.0);
    for (int k = 0; k < kNodes; ++k) {
      const C e = std::polar(kRadius, 2.0 * M_PI * k / kNodes);
      const C w = c + e;
      acc += g(w) * e / ((w - C(s, 0.0)) * (w - p));
    }
    return acc / static_cast<double>(kNodes);
  };
  std::sort(breaks.begin(), breaks.end());
  const double a = breaks.front(), b = breaks.back();
  if (p.real() > a && p.real() < b) breaks.push_back(p.real());
  auto res = integrate_adaptive<C>(regular, breaks, opt);
  const double im = p.imag();
  // Arguments of s - p along the segment never cross the branch cut since
  // Im(s - p) has a fixed sign.
  const double sgn_im = (im > 0.0 || (im == 0.0 && !std::signbit(im))) ? -1.0 : 1.0;
  const double ib = std::abs(im) * sgn_im;
  const double arg_b = std::atan2(ib, b - p.real());
  const double arg_a = std::atan2(ib, a - p.real());
  double arg_a_fixed = arg_a;
  if (im == 0.0 && a - p.real() < 0.0) arg_a_fixed = -M_PI;
  const C log_ratio(std::log(std::abs(C(b, 0.0) - p)) - std::log(std::abs(C(a, 0.0) - p)), arg_b - arg_a_fixed);
  res.value += gp * log_ratio;
  return res;
}

} // namespace abk
