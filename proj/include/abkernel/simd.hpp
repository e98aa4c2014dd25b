#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace abk::simd {

// Three-term recurrence coefficients of the orthonormal Laguerre functions
// psi_m^a: psi_{m+1} = ((A_m - u) psi_m - B_m psi_{m-1}) D_m.
struct LaguerreTable {
  double a = 0.0;
  int m_max = 0;
  double log_norm0 = 0.0; // -lgamma(a+1)/2
  std::vector<double> A, B, D;
};

LaguerreTable make_laguerre_table(double a, int m_max);

// out[i] = sum_{m <= m_top} c[m] psi_m^a(u[i]) with split complex storage.
using LaguerreSumFn = void (*)(const LaguerreTable& tab, const double* u, size_t n, const double* c_re,
                               const double* c_im, int m_top, double* out_re, double* out_im);

// out[j] = sum_{q < k_count} g[q] exp(i (k_min + q) theta_j), theta_j = theta0 + j dtheta.
using FourierRowFn = void (*)(const double* g_re, const double* g_im, int k_min, int k_count, double theta0,
                              double dtheta, size_t n, double* out_re, double* out_im);

enum class Backend { scalar, avx2 };

struct Kernels {
  Backend backend;
  const char* name;
  LaguerreSumFn laguerre_sum;
  FourierRowFn fourier_row;
};

const Kernels& scalar_kernels();
// nullptr when the AVX2 translation unit was not built.
const Kernels* avx2_kernels();

bool cpu_has_avx2();
bool available(Backend b);

// The dispatched set: AVX2 when built and supported by the CPU, unless
// ABKERNEL_SIMD=scalar or set_backend overrides it.
const Kernels& active();
void set_backend(Backend b);
std::string backend_name();

} // namespace abk::simd
