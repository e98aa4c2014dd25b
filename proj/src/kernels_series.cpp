#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "abkernel/errors.hpp"
#include "abkernel/kernels.hpp"
#include "abkernel/specfun.hpp"

namespace abk {

namespace {

namespace mp = boost::multiprecision;

template <unsigned D>
using Real = mp::number<mp::mpfr_float_backend<D>, mp::et_off>;

constexpr int kMaxOrder = 4096;

// Uniform (Debye) estimate of log I_nu(z); used only to size loops.
double log_bessel_estimate(double nu, double z) {
  nu = std::max(nu, 0.5);
  const double x = z / nu;
  const double q = std::sqrt(1.0 + x * x);
  const double eta = q + std::log(x / (1.0 + q));
  return nu * eta - 0.5 * std::log(2.0 * M_PI * nu) - 0.5 * std::log(q);
}

template <class R>
R lgamma_r(const R& x) {
  R out;
  int sign = 0;
  mpfr_lgamma(out.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
  return out;
}

// I_nu(z) by the ascending series, all terms positive.
template <class R>
R bessel_i_series_r(const R& nu, const R& z, int bits) {
  R term = exp(nu * log(z / 2) - lgamma_r<R>(nu + 1));
  R sum = term;
  const R q = z * z / 4;
  const R eps = ldexp(R(1), -bits - 8);
  for (int n = 0; n < 1000000; ++n) {
    term *= q / ((n + 1) * (nu + n + 1));
    sum += term;
    if (term < eps * sum && n > q) break;
  }
  return sum;
}

// I_{nu0 + j}(z), j = 0..J, by backward recurrence normalized at j = 0.
template <class R>
std::vector<R> bessel_ladder(const R& nu0r, int J, const R& z, double zd, int bits) {
  const double nu0 = static_cast<double>(nu0r);
  const double drop = bits * M_LN2 + 10.0;
  const double ref = log_bessel_estimate(nu0 + J, zd);
  int N = J + 10;
  while (log_bessel_estimate(nu0 + N, zd) > ref - drop) N += 10;
  std::vector<R> f(J + 1);
  R fp1 = 0, fj = 1;
  for (int j = N; j >= 1; --j) {
    if (j <= J) f[j] = fj;
    const R fm1 = fp1 + 2 * (nu0r + j) / z * fj;
    fp1 = fj;
    fj = fm1;
  }
  f[0] = fj;
  const R base = bessel_i_series_r<R>(nu0r, z, bits);
  const R scale = base / f[0];
  for (auto& v : f) v *= scale;
  return f;
}

struct SeriesOut {
  double re = 0.0, im = 0.0, err = 0.0;
  bool tail_ok = false;
  int kp = 0, kn = 0;
};

template <unsigned D>
SeriesOut series_core(double alpha, double b0, double t, double r1, double r2, double dth, double tail_tol,
                      int kp, int kn) {
  using R = Real<D>;
  const int bits = static_cast<int>(D * 3.3219280948873623);
  const R tau = R(t) * R(b0);
  const R sh = sinh(tau);
  const R ch = cosh(tau);
  const R z = R(b0) * R(r1) * R(r2) / (2 * sh);
  const double zd = static_cast<double>(z);
  R pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  const R log_pref = log(R(b0) / (4 * pi * sh)) - R(alpha) * tau -
                     R(b0) * (R(r1) * R(r1) + R(r2) * R(r2)) * ch / (4 * sh);

  // The negative branch starts at order 1 - alpha, formed in full precision.
  auto pos = bessel_ladder<R>(R(alpha), kp, z, zd, bits);
  auto neg = bessel_ladder<R>(1 - R(alpha), kn - 1, z, zd, bits);

  const R c1 = cos(R(dth)), s1 = sin(R(dth));
  const R em = exp(-tau), ep = exp(tau);
  R sr = 0, si = 0, abs_sum = 0;
  {
    R w = 1, c = 1, s = 0;
    for (int k = 0; k <= kp; ++k) {
      const R term = w * pos[k];
      sr += term * c;
      si += term * s;
      abs_sum += term;
      w *= em;
      const R cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
    }
  }
  {
    R w = ep, c = c1, s = -s1;
    for (int n = 1; n <= kn; ++n) {
      const R term = w * neg[n - 1];
      sr += term * c;
      si += term * s;
      abs_sum += term;
      w *= ep;
      const R cn = c * c1 + s * s1;
      s = s * c1 - c * s1;
      c = cn;
    }
  }

  const double rho_p = std::exp(-t * b0) * bessel_i_ratio_bound(kp + alpha, zd);
  const double rho_n = std::exp(t * b0) * bessel_i_ratio_bound(kn - alpha, zd);
  SeriesOut out;
  out.kp = kp;
  out.kn = kn;
  R tail = 0;
  bool finite_tail = true;
  tail += exp(-R(kp) * tau) * pos[kp] * R(rho_p / (1.0 - rho_p));
  if (rho_n < 1.0)
    tail += exp(R(kn) * tau) * neg[kn - 1] * R(rho_n / (1.0 - rho_n));
  else
    finite_tail = false;
  const R mag = sqrt(sr * sr + si * si);
  out.tail_ok = finite_tail && tail <= R(tail_tol) * mag;
  const R pref = exp(log_pref);
  out.re = static_cast<double>(pref * sr);
  out.im = static_cast<double>(pref * si);
  const R round = ldexp(abs_sum, -bits + 6) * (kp + kn + 10);
  out.err = static_cast<double>(pref * (tail + round));
  return out;
}

constexpr unsigned kTiers[] = {30, 60, 120, 240, 480, 960};

SeriesOut run_tier(unsigned d, double alpha, double b0, double t, double r1, double r2, double dth, double tol, int kp,
                   int kn) {
  switch (d) {
    case 30: return series_core<30>(alpha, b0, t, r1, r2, dth, tol, kp, kn);
    case 60: return series_core<60>(alpha, b0, t, r1, r2, dth, tol, kp, kn);
    case 120: return series_core<120>(alpha, b0, t, r1, r2, dth, tol, kp, kn);
    case 240: return series_core<240>(alpha, b0, t, r1, r2, dth, tol, kp, kn);
    case 480: return series_core<480>(alpha, b0, t, r1, r2, dth, tol, kp, kn);
    default: return series_core<960>(alpha, b0, t, r1, r2, dth, tol, kp, kn);
  }
}

// Smallest order past which log(weight * I) stays below peak - drop.
int order_cutoff(double nu0, double sign_tau, double z, double drop) {
  auto lt = [&](int j) { return sign_tau * j + log_bessel_estimate(nu0 + j, z); };
  double peak = lt(0);
  int j = 0;
  while (j < kMaxOrder) {
    const double v = lt(j + 1);
    if (v < lt(j) && v < peak - drop) return j + 1;
    peak = std::max(peak, v);
    ++j;
  }
  return kMaxOrder + 1;
}

} // namespace

KernelValue heat_kernel_series(const FieldConfig& cfg, double t, PolarPoint x, PolarPoint y, double tail_tol) {
  if (!(t > 0.0)) throw DomainError("heat_kernel_series: t must be > 0");
  if (!(tail_tol > 0.0)) throw DomainError("heat_kernel_series: tail_tol must be > 0");
  KernelValue kv;
  kv.method = KernelMethod::series;
  if (x.r == 0.0 || y.r == 0.0) return kv;
  const double tau = t * cfg.b0;
  const double z = cfg.b0 * x.r * y.r / (2.0 * std::sinh(tau));
  const double need_bits = 64.0 + (2.0 * z * std::cosh(tau) + std::abs(std::log(tail_tol))) / M_LN2;
  unsigned tier = 0;
  for (unsigned d : kTiers)
    if (d * 3.3219280948873623 >= need_bits) {
      tier = d;
      break;
    }
  if (tier == 0)
    throw NonConvergenceError("heat_kernel_series: cancellation needs " + std::to_string(static_cast<int>(need_bits)) +
                              " bits, beyond the top precision tier");
  const double drop = need_bits * M_LN2 + 10.0;
  int kp = order_cutoff(cfg.alpha, -tau, z, drop);
  int kn = std::max(1, order_cutoff(1.0 - cfg.alpha, tau, z, drop));
  const double dth = x.theta - y.theta;
  for (int attempt = 0; attempt < 8; ++attempt) {
    if (kp > kMaxOrder || kn > kMaxOrder)
      throw NonConvergenceError("heat_kernel_series: tail rule not met within |k| <= 4096");
    const auto out = run_tier(tier, cfg.alpha, cfg.b0, t, x.r, y.r, dth, tail_tol, kp, kn);
    if (out.tail_ok) {
      kv.value = cplx(out.re, out.im);
      kv.abs_error_estimate = out.err;
      return kv;
    }
    kp = kp + kp / 2 + 16;
    kn = kn + kn / 2 + 16;
  }
  throw NonConvergenceError("heat_kernel_series: tail rule not met");
}

} // namespace abk
