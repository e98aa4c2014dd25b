#include "abkernel/simd.hpp"

#if defined(ABK_HAVE_AVX2_TU) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>

namespace abk::simd {

namespace {

constexpr double kBig = 0x1p300;
constexpr double kInvBig = 0x1p-300;
constexpr double kLogBig = 300.0 * M_LN2;

void laguerre_sum_avx2(const LaguerreTable& tab, const double* u, size_t n, const double* c_re,
                       const double* c_im, int m_top, double* out_re, double* out_im) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d big = _mm256_set1_pd(kBig);
  const __m256d inv_big = _mm256_set1_pd(kInvBig);
  const __m256d one = _mm256_set1_pd(1.0);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    if (u[i] <= 0.0 || u[i + 1] <= 0.0 || u[i + 2] <= 0.0 || u[i + 3] <= 0.0) {
      scalar_kernels().laguerre_sum(tab, u + i, 4, c_re, c_im, m_top, out_re + i, out_im + i);
      continue;
    }
    const __m256d x = _mm256_loadu_pd(u + i);
    __m256d prev = _mm256_setzero_pd();
    __m256d cur = one;
    __m256d ar = _mm256_set1_pd(c_re[0]);
    __m256d ai = _mm256_set1_pd(c_im[0]);
    __m256d cnt = _mm256_setzero_pd();
    for (int m = 0; m < m_top; ++m) {
      const __m256d am = _mm256_sub_pd(_mm256_set1_pd(tab.A[m]), x);
      const __m256d bp = _mm256_mul_pd(_mm256_set1_pd(tab.B[m]), prev);
      const __m256d next = _mm256_mul_pd(_mm256_fmsub_pd(am, cur, bp), _mm256_set1_pd(tab.D[m]));
      prev = cur;
      cur = next;
      ar = _mm256_fmadd_pd(_mm256_set1_pd(c_re[m + 1]), cur, ar);
      ai = _mm256_fmadd_pd(_mm256_set1_pd(c_im[m + 1]), cur, ai);
      const __m256d mask = _mm256_cmp_pd(_mm256_andnot_pd(sign, cur), big, _CMP_GT_OQ);
      if (_mm256_movemask_pd(mask)) {
        const __m256d f = _mm256_blendv_pd(one, inv_big, mask);
        prev = _mm256_mul_pd(prev, f);
        cur = _mm256_mul_pd(cur, f);
        ar = _mm256_mul_pd(ar, f);
        ai = _mm256_mul_pd(ai, f);
        cnt = _mm256_add_pd(cnt, _mm256_and_pd(mask, one));
      }
    }
    alignas(32) double sr[4], si[4], sc[4];
    _mm256_store_pd(sr, ar);
    _mm256_store_pd(si, ai);
    _mm256_store_pd(sc, cnt);
    for (int l = 0; l < 4; ++l) {
      const double xl = u[i + l];
      const double ls = 0.5 * tab.a * std::log(xl) - 0.5 * xl + tab.log_norm0 + sc[l] * kLogBig;
      const double s = ls < -745.0 ? 0.0 : std::exp(ls);
      out_re[i + l] = sr[l] * s;
      out_im[i + l] = si[l] * s;
    }
  }
  if (i < n) scalar_kernels().laguerre_sum(tab, u + i, n - i, c_re, c_im, m_top, out_re + i, out_im + i);
}

void fourier_row_avx2(const double* g_re, const double* g_im, int k_min, int k_count, double theta0,
                      double dtheta, size_t n, double* out_re, double* out_im) {
  size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    alignas(32) double zr[4], zi[4], wr0[4], wi0[4];
    for (int l = 0; l < 4; ++l) {
      const double th = theta0 + static_cast<double>(j + l) * dtheta;
      zr[l] = std::cos(th);
      zi[l] = std::sin(th);
      wr0[l] = std::cos(k_min * th);
      wi0[l] = std::sin(k_min * th);
    }
    const __m256d vzr = _mm256_load_pd(zr), vzi = _mm256_load_pd(zi);
    __m256d wr = _mm256_load_pd(wr0), wi = _mm256_load_pd(wi0);
    __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd();
    for (int q = 0; q < k_count; ++q) {
      const __m256d gr = _mm256_set1_pd(g_re[q]), gi = _mm256_set1_pd(g_im[q]);
      sr = _mm256_fmadd_pd(gr, wr, sr);
      sr = _mm256_fnmadd_pd(gi, wi, sr);
      si = _mm256_fmadd_pd(gr, wi, si);
      si = _mm256_fmadd_pd(gi, wr, si);
      const __m256d t = _mm256_fmsub_pd(wr, vzr, _mm256_mul_pd(wi, vzi));
      wi = _mm256_fmadd_pd(wr, vzi, _mm256_mul_pd(wi, vzr));
      wr = t;
    }
    _mm256_storeu_pd(out_re + j, sr);
    _mm256_storeu_pd(out_im + j, si);
  }
  if (j < n)
    scalar_kernels().fourier_row(g_re, g_im, k_min, k_count, theta0 + static_cast<double>(j) * dtheta, dtheta,
                                 n - j, out_re + j, out_im + j);
}

} // namespace

const Kernels* avx2_kernels() {
  static const Kernels k{Backend::avx2, "avx2", &laguerre_sum_avx2, &fourier_row_avx2};
  return &k;
}

} // namespace abk::simd

#else

namespace abk::simd {

const Kernels* avx2_kernels() { return nullptr; }

} // namespace abk::simd

#endif
