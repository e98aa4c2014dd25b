#include <cmath>

#include "abkernel/simd.hpp"

namespace abk::simd {

namespace {

constexpr double kBig = 0x1p300;
constexpr double kInvBig = 0x1p-300;
constexpr double kLogBig = 300.0 * M_LN2;

void laguerre_sum_scalar(const LaguerreTable& tab, const double* u, size_t n, const double* c_re,
                         const double* c_im, int m_top, double* out_re, double* out_im) {
  for (size_t i = 0; i < n; ++i) {
    const double x = u[i];
    if (x <= 0.0) {
      double sr = 0.0, si = 0.0;
      if (tab.a == 0.0)
        for (int m = 0; m <= m_top; ++m) sr += c_re[m], si += c_im[m];
      out_re[i] = sr;
      out_im[i] = si;
      continue;
    }
    double prev = 0.0, cur = 1.0;
    double ar = c_re[0], ai = c_im[0];
    int cnt = 0;
    for (int m = 0; m < m_top; ++m) {
      const double next = ((tab.A[m] - x) * cur - tab.B[m] * prev) * tab.D[m];
      prev = cur;
      cur = next;
      ar += c_re[m + 1] * cur;
      ai += c_im[m + 1] * cur;
      if (std::abs(cur) > kBig) {
        prev *= kInvBig;
        cur *= kInvBig;
        ar *= kInvBig;
        ai *= kInvBig;
        ++cnt;
      }
    }
    const double ls = 0.5 * tab.a * std::log(x) - 0.5 * x + tab.log_norm0 + cnt * kLogBig;
    const double s = ls < -745.0 ? 0.0 : std::exp(ls);
    out_re[i] = ar * s;
    out_im[i] = ai * s;
  }
}

void fourier_row_scalar(const double* g_re, const double* g_im, int k_min, int k_count, double theta0,
                        double dtheta, size_t n, double* out_re, double* out_im) {
  for (size_t j = 0; j < n; ++j) {
    const double th = theta0 + static_cast<double>(j) * dtheta;
    const double zr = std::cos(th), zi = std::sin(th);
    double wr = std::cos(k_min * th), wi = std::sin(k_min * th);
    double sr = 0.0, si = 0.0;
    for (int q = 0; q < k_count; ++q) {
      sr += g_re[q] * wr - g_im[q] * wi;
      si += g_re[q] * wi + g_im[q] * wr;
      const double t = wr * zr - wi * zi;
      wi = wr * zi + wi * zr;
      wr = t;
    }
    out_re[j] = sr;
    out_im[j] = si;
  }
}

} // namespace

LaguerreTable make_laguerre_table(double a, int m_max) {
  LaguerreTable t;
  t.a = a;
  t.m_max = m_max;
  t.log_norm0 = -0.5 * std::lgamma(a + 1.0);
  t.A.resize(m_max + 1);
  t.B.resize(m_max + 1);
  t.D.resize(m_max + 1);
  for (int m = 0; m <= m_max; ++m) {
    t.A[m] = 2.0 * m + 1.0 + a;
    t.B[m] = std::sqrt(m * (m + a));
    t.D[m] = 1.0 / std::sqrt((m + 1.0) * (m + 1.0 + a));
  }
  return t;
}

const Kernels& scalar_kernels() {
  static const Kernels k{Backend::scalar, "scalar", &laguerre_sum_scalar, &fourier_row_scalar};
  return k;
}

} // namespace abk::simd
