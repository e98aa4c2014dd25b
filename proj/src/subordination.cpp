#include <algorithm>
#include <cmath>
#include <string>

#include "abkernel/errors.hpp"
#include "abkernel/propagators.hpp"
#include "abkernel/quadrature.hpp"

namespace abk {

SubordinationRecord subordination_heat_check(double x, double y, double quad_tol) {
  if (!(x > 0.0 && y > 0.0)) throw DomainError("subordination_heat_check: x and y must be > 0");
  const double c = y * std::sqrt(x);
  // Scaled integrand e^{-c (cosh u - 1) - u/2}; the factor e^{-c} is restored at the end.
  auto f = [c](double u) { return std::exp(-c * (std::cosh(u) - 1.0) - 0.5 * u); };
  const double cut = 40.0 + std::abs(std::log(quad_tol));
  double hi = 1.0, lo = -1.0;
  while (c * (std::cosh(hi) - 1.0) + 0.5 * hi < cut) hi *= 1.25;
  while (c * (std::cosh(lo) - 1.0) + 0.5 * lo < cut) lo *= 1.25;
  std::vector<double> breaks{lo, 0.0, hi};
  const double w = 1.0 / std::sqrt(c);
  for (double k : {1.0, 3.0})
    if (k * w < hi) breaks.push_back(k * w);
  for (double k : {1.0, 3.0})
    if (-k * w > lo) breaks.push_back(-k * w);
  for (double b = -2.0; b > lo; b *= 2.0) breaks.push_back(b);
  AdaptiveOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = quad_tol;
  auto r = integrate_adaptive<double>(f, breaks, opt);
  SubordinationRecord rec;
  rec.lhs = std::exp(-c);
  rec.rhs = std::sqrt(c / (2.0 * M_PI)) * r.value * std::exp(-c);
  return rec;
}

cplx subordination_halfwave_eps(double x, double t, double eps) {
  if (!(x > 0.0) || !(eps > 0.0) || t == 0.0) throw DomainError("subordination_halfwave_eps: need x > 0, eps > 0, t != 0");
  if (t < 0.0) return std::conj(subordination_halfwave_eps(x, -t, eps));
  // I_{eps, eps x}(t x, t) in u = log r:
  //   int exp(e^u (i t x - eps x) + e^{-u} (i t - eps) / 4 - u / 2) du
  const cplx a(-eps * x, t * x), b(-0.25 * eps, 0.25 * t);
  auto f = [&](double u) { return std::exp(std::exp(u) * a + std::exp(-u) * b - 0.5 * u); };
  const double u_hi = std::log(37.0 / (eps * x));
  const double u_lo = -std::log(148.0 / eps);
  auto rate = [&](double u) {
    const double eu = std::exp(u), emu = std::exp(-u);
    return std::abs(t * x * eu - 0.25 * t * emu) + eps * x * eu + 0.25 * eps * emu + 1.0;
  };
  const Rule& gl = gauss_legendre(16);
  cplx total(0.0, 0.0);
  double u = u_lo;
  while (u < u_hi) {
    double du = std::min(0.25, M_PI / rate(u));
    du = std::min(du, M_PI / rate(std::min(u + du, u_hi)));
    const double v = std::min(u + du, u_hi);
    const double c = 0.5 * (u + v), h = 0.5 * (v - u);
    cplx acc(0.0, 0.0);
    for (int i = 0; i < 16; ++i) acc += gl.w[i] * f(c + h * gl.x[i]);
    total += h * acc;
    u = v;
  }
  return std::sqrt(cplx(eps, -t)) / (2.0 * std::sqrt(M_PI)) * total;
}

HalfwaveRecord subordination_halfwave_check(double x, double t, const std::vector<double>& eps_seq, double quad_tol) {
  (void)quad_tol;
  if (!(x > 0.0)) throw DomainError("subordination_halfwave_check: x must be > 0");
  if (eps_seq.size() < 2) throw DomainError("subordination_halfwave_check: need at least two eps values");
  for (size_t i = 1; i < eps_seq.size(); ++i)
    if (!(eps_seq[i] < eps_seq[i - 1]) || !(eps_seq[i] > 0.0))
      throw DomainError("subordination_halfwave_check: eps_seq must be positive and strictly decreasing");
  HalfwaveRecord rec;
  rec.lhs = std::polar(1.0, t * std::sqrt(x));
  rec.eps = eps_seq;
  for (double e : eps_seq) rec.values.push_back(subordination_halfwave_eps(x, t, e));
  // Neville tableau evaluated at eps = 0.
  const size_t n = eps_seq.size();
  std::vector<cplx> p = rec.values;
  rec.extrapolants.push_back(p[0]);
  for (size_t lvl = 1; lvl < n; ++lvl) {
    for (size_t i = 0; i + lvl < n; ++i) {
      const double ei = eps_seq[i], ej = eps_seq[i + lvl];
      p[i] = (ei * p[i + 1] - ej * p[i]) / (ei - ej);
    }
    rec.extrapolants.push_back(p[0]);
  }
  rec.rhs_extrapolated = rec.extrapolants.back();
  if (n >= 3) {
    const double d_last = std::abs(rec.extrapolants[n - 1] - rec.extrapolants[n - 2]);
    const double d_prev = std::abs(rec.extrapolants[n - 2] - rec.extrapolants[n - 3]);
    if (d_last > 10.0 * std::max(d_prev, 1e-9))
      throw ExtrapolationError("subordination_halfwave_check: extrapolants stopped contracting (" +
                               std::to_string(d_prev) + " -> " + std::to_string(d_last) + ")");
  }
  return rec;
}

} // namespace abk
