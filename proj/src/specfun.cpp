#include "abkernel/specfun.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "abkernel/errors.hpp"
#include "abkernel/quadrature.hpp"

namespace abk {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_lanczos(double x) {
  // Gamma(x) for x >= 0.5
  const double xm = x - 1.0;
  double a = kLanczos[0];
  const double t = xm + kLanczosG + 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (xm + i);
  const double half_pow = std::pow(t, 0.5 * (xm + 0.5));
  return std::sqrt(2.0 * M_PI) * half_pow * (std::exp(-t) * half_pow) * a;
}

constexpr double kLogDblMax = 709.782712893384;

} // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_fn: argument must be > 0, got " + std::to_string(x));
  if (x > 171.6) throw OverflowError("gamma_fn: Gamma(" + std::to_string(x) + ") overflows double");
  if (x == std::floor(x) && x <= 21.0) {
    double f = 1.0;
    for (int i = 2; i < static_cast<int>(x); ++i) f *= i;
    return f;
  }
  if (x < 0.5) return M_PI / (std::sin(M_PI * x) * gamma_lanczos(1.0 - x));
  return gamma_lanczos(x);
}

double pochhammer(double a, unsigned n) {
  double p = 1.0;
  for (unsigned i = 0; i < n; ++i) p *= a + i;
  return p;
}

double binom_shift(double a, unsigned m) {
  double b = 1.0;
  for (unsigned i = 1; i <= m; ++i) b *= (a + i) / i;
  return b;
}

double laguerre(double order, unsigned degree, double x) {
  if (!(order > -1.0)) throw DomainError("laguerre: order must be > -1");
  if (x < 0.0) throw DomainError("laguerre: x must be >= 0");
  double l0 = 1.0;
  if (degree == 0) return l0;
  double l1 = 1.0 + order - x;
  for (unsigned n = 1; n < degree; ++n) {
    const double l2 = ((2.0 * n + 1.0 + order - x) * l1 - (n + order) * l0) / (n + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

double pkm_poly(double alpha_k, unsigned degree, double r) {
  return laguerre(alpha_k, degree, r) / binom_shift(alpha_k, degree);
}

void laguerre_functions(double a, double u, int m_max, double* out) {
  if (m_max < 0) return;
  if (u <= 0.0) {
    // u^{a/2} factor vanishes unless a == 0
    const double v = (a == 0.0) ? 1.0 : 0.0;
    if (v == 0.0) {
      for (int m = 0; m <= m_max; ++m) out[m] = 0.0;
      return;
    }
    // L^0_m(0) = 1, orthonormal factor is 1 when a = 0
    for (int m = 0; m <= m_max; ++m) out[m] = 1.0;
    return;
  }
  // Run the recurrence on rescaled values, remembering the log-scale of each.
  std::vector<double> offs(m_max + 1);
  double log_scale = 0.5 * a * std::log(u) - 0.5 * u - 0.5 * std::lgamma(a + 1.0);
  double prev = 0.0, cur = 1.0;
  out[0] = cur;
  offs[0] = log_scale;
  for (int m = 0; m < m_max; ++m) {
    const double next = ((2.0 * m + 1.0 + a - u) * cur - std::sqrt(m * (m + a)) * prev) /
                        std::sqrt((m + 1.0) * (m + 1.0 + a));
    prev = cur;
    cur = next;
    const double mag = std::abs(cur);
    if (mag > 1e150 || (mag < 1e-150 && mag > 0.0)) {
      prev /= mag;
      cur /= mag;
      log_scale += std::log(mag);
    }
    out[m + 1] = cur;
    offs[m + 1] = log_scale;
  }
  for (int m = 0; m <= m_max; ++m) out[m] = (offs[m] < -745.0) ? 0.0 : out[m] * std::exp(offs[m]);
}

std::vector<double> laguerre_functions(double a, double u, int m_max) {
  std::vector<double> v(m_max + 1);
  laguerre_functions(a, u, m_max, v.data());
  return v;
}

double bessel_i_ratio_bound(double nu, double x) {
  const double h = nu + 0.5;
  return x / (h + std::sqrt(x * x + h * h));
}

EvalResult<double> bessel_i_scaled_series(double nu, double x) {
  if (x == 0.0) return {nu == 0.0 ? 1.0 : 0.0, 0.0};
  // term_n = (x/2)^{nu+2n} / (n! Gamma(nu+n+1)) e^{-x}, summed in a rescaled frame.
  double log_offset = nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) - x;
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  int small_run = 0;
  for (int n = 0; n < 100000; ++n) {
    term *= q / ((n + 1.0) * (nu + n + 1.0));
    sum += term;
    if (term < 1e-17 * sum) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    if (sum > 1e250) {
      sum *= 1e-250;
      term *= 1e-250;
      log_offset += 250.0 * M_LN10;
    }
  }
  const double scale = (log_offset < -745.0) ? 0.0 : std::exp(log_offset);
  return {sum * scale, term * scale};
}

EvalResult<double> bessel_i_scaled_integral(double nu, double x) {
  if (x == 0.0) return {nu == 0.0 ? 1.0 : 0.0, 0.0};
  AdaptiveOptions opt;
  // Roundoff floor relative to the L1 size sqrt(pi/(2x)) of the peak; the
  // cosine integral cancels below it.
  opt.abs_tol = 1e-15 * std::sqrt(M_PI / (2.0 * x));
  opt.rel_tol = 1e-14;
  opt.max_depth = 30;
  // (1/pi) int_0^pi e^{x(cos s - 1)} cos(nu s) ds, split where the Gaussian-like
  // peak at s = 0 has decayed.
  auto f1 = [&](double s) { return std::exp(x * (std::cos(s) - 1.0)) * std::cos(nu * s); };
  std::vector<double> breaks{0.0, M_PI};
  const double w = 1.0 / std::sqrt(x);
  for (double c : {1.0, 3.0, 8.0})
    if (c * w < M_PI) breaks.push_back(c * w);
  auto r1 = integrate_adaptive<double>(f1, breaks, opt);
  double value = r1.value / M_PI;
  double err = std::max(r1.abs_error, opt.abs_tol) / M_PI;
  const double sn = std::sin(nu * M_PI);
  if (sn != 0.0) {
    // tail integral int_0^S e^{-x cosh s - nu s} ds, scaled by e^{-x}
    double smax = 1.0;
    while (x * (std::cosh(smax) + 1.0) + nu * smax < 20.0 * M_LN10 && smax < 50.0) smax *= 1.5;
    auto f2 = [&](double s) { return std::exp(-x * (std::cosh(s) + 1.0) - nu * s); };
    AdaptiveOptions opt2 = opt;
    opt2.abs_tol = 1e-300;
    auto r2 = integrate_adaptive<double>(f2, 0.0, smax, opt2);
    value -= sn / M_PI * r2.value;
    err += std::abs(sn) / M_PI * r2.abs_error;
  }
  return {value, err};
}

BesselMethod bessel_i_method(double nu, double x) {
  // The cosine integral cancels down to I_nu(x) e^{-x} ~ e^{-nu^2/(2x)}; past
  // nu^2 > 20 x that loses more than ~9 digits, so the series is kept there.
  if (x > std::max(30.0, 2.0 * nu) && nu * nu <= 20.0 * x) return BesselMethod::integral;
  return BesselMethod::series;
}

EvalResult<double> bessel_i_scaled(double nu, double x) {
  if (nu < 0.0 || std::isnan(nu)) throw DomainError("bessel_i: order must be >= 0");
  if (x < 0.0 || std::isnan(x)) throw DomainError("bessel_i: argument must be >= 0");
  if (bessel_i_method(nu, x) == BesselMethod::integral) return bessel_i_scaled_integral(nu, x);
  return bessel_i_scaled_series(nu, x);
}

EvalResult<double> bessel_i(double nu, double x) {
  auto s = bessel_i_scaled(nu, x);
  if (s.value == 0.0) return s;
  if (x + std::log(s.value) >= kLogDblMax) {
    throw OverflowError("bessel_i: I_" + std::to_string(nu) + "(" + std::to_string(x) + ") exceeds double range");
  }
  const double ex = std::exp(x);
  return {s.value * ex, s.abs_error_estimate * ex};
}

} // namespace abk
