#include <algorithm>
#include <cmath>
#include <string>

#include "abkernel/errors.hpp"
#include "abkernel/kernels.hpp"
#include "abkernel/quadrature.hpp"

namespace abk {

namespace {

// Angle difference reduced to (-pi, pi].
double reduce_angle(double d) {
  d = std::remainder(d, 2.0 * M_PI);
  if (d <= -M_PI) d += 2.0 * M_PI;
  return d;
}

// expm1 for complex argument without cancellation near 0.
cplx cexpm1(cplx w) {
  const double x = w.real(), y = w.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

// 1/w - 1/expm1(w): analytic for |Im w| < 2 pi.
cplx pole_remainder(cplx w) {
  if (std::abs(w) < 1e-3) return 0.5 - w / 12.0 + w * w * w / 720.0;
  return 1.0 / w - 1.0 / cexpm1(w);
}

// Correction integral int exp(log_p - z cosh s + alpha (s - tau)) / (e^{i dth} e^{s - tau} + 1) ds,
// with dth reduced to (-pi, pi]. The denominator equals 1 - e^{s - p} for
// p = tau - i (pi + dth) (shifted into (-pi, pi] in its imaginary part).
QuadResult<cplx> correction_integral(double alpha, double z, double tau, double dth, double log_p, double quad_tol) {
  double ip = -(M_PI + dth);
  if (ip <= -M_PI) ip += 2.0 * M_PI;
  const cplx p(tau, ip);
  auto logh = [&](double s) { return log_p - z * std::cosh(s) + alpha * (s - tau); };
  auto h = [&](cplx s) { return std::exp(log_p - z * std::cosh(s) + alpha * (s - tau)); };

  // Integrand peak and truncation: |integrand| ~ exp(logh(s)) / |1 - e^{s-p}|.
  const double s_peak = std::asinh(alpha / z);
  const double peak = logh(s_peak) - std::max(0.0, s_peak - tau);
  const double cut = peak + std::log(quad_tol) - 8.0;
  auto logmag = [&](double s) { return logh(s) - std::max(0.0, s - tau); };
  double hi = std::max(1.0, s_peak + 1.0);
  while (logmag(hi) > cut && hi < 800.0) hi = 1.5 * hi + 1.0;
  double lo = std::min(-1.0, s_peak - 1.0);
  while (logmag(lo) > cut && lo > -1e9) lo = 1.5 * lo - 1.0;

  std::vector<double> breaks{lo, hi, 0.0, s_peak};
  const double w = 1.0 / std::sqrt(std::max(z, 1e-300));
  for (double c : {1.0, 3.0, 8.0}) {
    breaks.push_back(s_peak + c * w);
    breaks.push_back(s_peak - c * w);
  }
  if (tau > lo && tau < hi) breaks.push_back(tau);
  for (double b = -2.0; b > lo; b *= 2.0) breaks.push_back(b);
  for (double b = 2.0; b < hi; b *= 2.0) breaks.push_back(b);
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(), [&](double b) { return b < lo || b > hi; }),
               breaks.end());

  AdaptiveOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = quad_tol;
  opt.max_depth = 20;

  const double near = 0.5;
  if (std::abs(ip) >= near) {
    auto f = [&](double s) -> cplx { return -h(cplx(s, 0.0)) / cexpm1(cplx(s, 0.0) - p); };
    opt.abs_tol = std::exp(peak) * std::max(quad_tol * 1e-3, 1e-15);
    return integrate_adaptive<cplx>(f, breaks, opt);
  }
  // -1/expm1(w) = -1/w + pole_remainder(w); the simple pole is integrated in closed form.
  opt.abs_tol = std::exp(peak) * std::max(quad_tol * 1e-3, 1e-15);
  auto reg = [&](double s) -> cplx { return h(cplx(s, 0.0)) * pole_remainder(cplx(s, 0.0) - p); };
  auto r1 = integrate_adaptive<cplx>(reg, breaks, opt);
  auto r2 = integrate_with_pole(h, p, breaks, opt);
  QuadResult<cplx> out;
  out.value = r1.value - r2.value;
  out.abs_error = r1.abs_error + r2.abs_error;
  out.evaluations = r1.evaluations + r2.evaluations;
  return out;
}

} // namespace

const char* method_name(KernelMethod m) {
  switch (m) {
    case KernelMethod::series: return "series";
    case KernelMethod::closed_form: return "closed_form";
    case KernelMethod::mehler: return "mehler";
  }
  return "?";
}

PhaseFactor phase_factor(double alpha, double theta1, double theta2) {
  const double d = theta1 - theta2;
  if (std::abs(d) <= M_PI) return {};
  if (d < 0.0) return {std::polar(1.0, -2.0 * M_PI * alpha)};
  return {std::polar(1.0, 2.0 * M_PI * alpha)};
}

KernelValue heat_kernel_closed_alpha(double alpha, double b0, double t, PolarPoint x, PolarPoint y, double quad_tol) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("heat_kernel_closed: alpha must lie in [0,1)");
  if (!(b0 > 0.0)) throw DomainError("heat_kernel_closed: b0 must be > 0");
  if (!(t > 0.0)) throw DomainError("heat_kernel_closed: t must be > 0");
  KernelValue kv;
  kv.method = KernelMethod::closed_form;
  const double tau = t * b0;
  const double log_sh = tau > 20.0 ? tau - M_LN2 + std::log1p(-std::exp(-2.0 * tau)) : std::log(std::sinh(tau));
  const double log_p = std::log(b0 / (4.0 * M_PI)) - log_sh - b0 * (x.r * x.r + y.r * y.r) / (4.0 * std::tanh(tau));
  const double z = b0 * x.r * y.r / (2.0 * std::sinh(tau));
  // phi folds the angle difference onto (-pi, pi], i.e. the j-shift with |dth + 2 pi j| <= pi.
  const double dth = reduce_angle(x.theta - y.theta);
  const cplx main_exp = z * std::cosh(cplx(tau, -dth)) - cplx(0.0, alpha * dth);
  const cplx main = std::exp(log_p + main_exp);
  if (alpha == 0.0) {
    kv.value = main;
    kv.abs_error_estimate = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(main);
    return kv;
  }
  if (z == 0.0) {
    // The correction integral equals the main term exactly when z = 0.
    kv.value = 0.0;
    return kv;
  }
  const auto corr = correction_integral(alpha, z, tau, dth, log_p, quad_tol);
  const double pref = std::sin(alpha * M_PI) / M_PI;
  kv.value = main - pref * corr.value;
  kv.abs_error_estimate = pref * corr.abs_error + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(main);
  return kv;
}

KernelValue heat_kernel_closed(const FieldConfig& cfg, double t, PolarPoint x, PolarPoint y, double quad_tol) {
  return heat_kernel_closed_alpha(cfg.alpha, cfg.b0, t, x, y, quad_tol);
}

KernelValue mehler_kernel(double b0, double t, PolarPoint x, PolarPoint y) {
  if (!(b0 > 0.0)) throw DomainError("mehler_kernel: b0 must be > 0");
  if (!(t > 0.0)) throw DomainError("mehler_kernel: t must be > 0");
  const double tau = b0 * t;
  const double x1 = x.x(), x2 = x.y(), y1 = y.x(), y2 = y.y();
  const double d2 = (x1 - y1) * (x1 - y1) + (x2 - y2) * (x2 - y2);
  const double log_sh = tau > 20.0 ? tau - M_LN2 + std::log1p(-std::exp(-2.0 * tau)) : std::log(std::sinh(tau));
  const double mag = std::log(b0 / (4.0 * M_PI)) - log_sh - b0 * d2 / (4.0 * std::tanh(tau));
  const double phase = 0.5 * b0 * (x1 * y2 - x2 * y1);
  KernelValue kv;
  kv.method = KernelMethod::mehler;
  kv.value = std::polar(std::exp(mag), phase);
  kv.abs_error_estimate = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(kv.value);
  return kv;
}

KernelValue heat_kernel(const FieldConfig& cfg, double t, PolarPoint x, PolarPoint y, double tol) {
  if (t * cfg.b0 < 1e-4) return heat_kernel_closed(cfg, t, x, y, tol);
  return heat_kernel_series(cfg, t, x, y, tol);
}

} // namespace abk
