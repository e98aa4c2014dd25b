#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"

#include "abkernel/simd.hpp"
#include "abkernel/specfun.hpp"

using namespace abk;

namespace {

struct SumCase {
  std::vector<double> u, cr, ci;
};

SumCase make_case(std::mt19937_64& rng, int m_max, size_t n) {
  SumCase c;
  std::uniform_real_distribution<double> uu(0.0, 4.0 * m_max + 40.0);
  std::normal_distribution<double> nn(0.0, 1.0);
  for (size_t i = 0; i < n; ++i) c.u.push_back(uu(rng));
  c.u[0] = 0.0;
  c.u[1] = 1e-9;
  for (int m = 0; m <= m_max; ++m) {
    c.cr.push_back(nn(rng));
    c.ci.push_back(nn(rng));
  }
  return c;
}

} // namespace

TEST_CASE("scalar laguerre_sum matches laguerre_functions") {
  std::mt19937_64 rng(41);
  const int M = 30;
  const auto tab = simd::make_laguerre_table(0.45, M);
  const auto c = make_case(rng, M, 37);
  std::vector<double> re(c.u.size()), im(c.u.size());
  simd::scalar_kernels().laguerre_sum(tab, c.u.data(), c.u.size(), c.cr.data(), c.ci.data(), M, re.data(), im.data());
  for (size_t i = 0; i < c.u.size(); ++i) {
    const auto psi = laguerre_functions(0.45, c.u[i], M);
    double sr = 0.0, si = 0.0, scale = 0.0;
    for (int m = 0; m <= M; ++m) {
      sr += c.cr[m] * psi[m];
      si += c.ci[m] * psi[m];
      scale += std::abs(psi[m]) * (std::abs(c.cr[m]) + std::abs(c.ci[m]));
    }
    CHECK(std::abs(re[i] - sr) <= 1e-12 * (scale + 1e-300));
    CHECK(std::abs(im[i] - si) <= 1e-12 * (scale + 1e-300));
  }
}

TEST_CASE("AVX2 kernels match the scalar reference") {
  const simd::Kernels* v = simd::avx2_kernels();
  if (v == nullptr || !simd::cpu_has_avx2()) {
    MESSAGE("AVX2 backend not available; equivalence not exercised");
    return;
  }
  const auto& s = simd::scalar_kernels();
  std::mt19937_64 rng(43);
  for (double a : {0.0, 0.3, 5.7, 40.2})
    for (int M : {0, 1, 7, 64, 300})
      for (size_t n : {size_t(1), size_t(3), size_t(4), size_t(17), size_t(256)}) {
        const auto tab = simd::make_laguerre_table(a, M);
        auto c = make_case(rng, M, std::max<size_t>(n, 2));
        c.u.resize(n);
        std::vector<double> r1(n), i1(n), r2(n), i2(n);
        s.laguerre_sum(tab, c.u.data(), n, c.cr.data(), c.ci.data(), M, r1.data(), i1.data());
        v->laguerre_sum(tab, c.u.data(), n, c.cr.data(), c.ci.data(), M, r2.data(), i2.data());
        for (size_t i = 0; i < n; ++i) {
          const double m = std::max({std::abs(r1[i]), std::abs(i1[i]), 1e-300});
          CHECK(std::abs(r1[i] - r2[i]) <= 1e-12 * m + 1e-300);
          CHECK(std::abs(i1[i] - i2[i]) <= 1e-12 * m + 1e-300);
        }
      }

  std::normal_distribution<double> nn(0.0, 1.0);
  for (int kc : {1, 5, 33, 129})
    for (size_t n : {size_t(1), size_t(6), size_t(64), size_t(255)}) {
      std::vector<double> gr(kc), gi(kc);
      for (int q = 0; q < kc; ++q) gr[q] = nn(rng), gi[q] = nn(rng);
      std::vector<double> r1(n), i1(n), r2(n), i2(n);
      const int kmin = -kc / 2;
      const double dth = 2 * M_PI / static_cast<double>(n);
      s.fourier_row(gr.data(), gi.data(), kmin, kc, 0.1, dth, n, r1.data(), i1.data());
      v->fourier_row(gr.data(), gi.data(), kmin, kc, 0.1, dth, n, r2.data(), i2.data());
      double norm = 0.0;
      for (int q = 0; q < kc; ++q) norm += std::hypot(gr[q], gi[q]);
      for (size_t j = 0; j < n; ++j) {
        CHECK(std::abs(r1[j] - r2[j]) <= 1e-12 * norm);
        CHECK(std::abs(i1[j] - i2[j]) <= 1e-12 * norm);
      }
    }
}

TEST_CASE("backend selection") {
  const auto before = simd::active().backend;
  simd::set_backend(simd::Backend::scalar);
  CHECK(simd::active().backend == simd::Backend::scalar);
  CHECK(simd::backend_name() == "scalar");
  if (simd::available(simd::Backend::avx2)) {
    simd::set_backend(simd::Backend::avx2);
    CHECK(simd::active().backend == simd::Backend::avx2);
  }
  simd::set_backend(before);
}

TEST_CASE("synthesis is backend independent") {
  const FieldConfig cfg(0.3, 1.0);
  std::mt19937_64 rng(47);
  const auto st = ut::random_state(cfg, {-8, 8, 20}, rng, 60);
  const auto before = simd::active().backend;
  simd::set_backend(simd::Backend::scalar);
  std::vector<cplx> a;
  for (double r : {0.0, 0.4, 1.9, 3.3, 6.0}) a.push_back(synthesize(st, {r, 1.3}));
  if (simd::available(simd::Backend::avx2)) {
    simd::set_backend(simd::Backend::avx2);
    size_t i = 0;
    for (double r : {0.0, 0.4, 1.9, 3.3, 6.0}) {
      CHECK(std::abs(synthesize(st, {r, 1.3}) - a[i]) <= 1e-12 * (1.0 + std::abs(a[i])));
      ++i;
    }
  }
  simd::set_backend(before);
}
