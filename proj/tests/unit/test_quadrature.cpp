#include <cmath>

#include "helpers.hpp"

#include "abkernel/grid.hpp"
#include "abkernel/quadrature.hpp"
#include "abkernel/specfun.hpp"

using namespace abk;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  for (int n : {1, 4, 16, 40}) {
    const Rule& g = gauss_legendre(n);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double s = 0.0;
      for (size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * std::pow(g.x[i], d);
      const double want = d % 2 ? 0.0 : 2.0 / (d + 1);
      CHECK(std::abs(s - want) <= 1e-14);
    }
  }
}

TEST_CASE("Gauss-Laguerre moments") {
  for (double a : {0.0, 0.5, 2.3})
    for (int n : {1, 5, 24, 64}) {
      const Rule& g = gauss_laguerre(n, a);
      for (int d = 0; d <= std::min(2 * n - 1, 12); ++d) {
        double s = 0.0;
        for (size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * std::pow(g.x[i], d);
        const double want = std::tgamma(a + d + 1);
        CHECK(std::abs(s - want) <= 1e-12 * want);
      }
    }
}

TEST_CASE("Gauss-Laguerre orthogonality") {
  for (double a : {0.1, 0.5, 0.9}) {
    const Rule& g = gauss_laguerre(24, a);
    for (unsigned m = 0; m <= 10; ++m)
      for (unsigned n = 0; n <= 10; ++n) {
        double s = 0.0;
        for (size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * laguerre(a, m, g.x[i]) * laguerre(a, n, g.x[i]);
        const double norm = std::tgamma(m + a + 1) / std::tgamma(m + 1.0);
        CHECK(std::abs(s - (m == n ? norm : 0.0)) <= 1e-10 * norm);
      }
  }
}

TEST_CASE("adaptive quadrature") {
  const auto r = integrate_adaptive<double>([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
  CHECK(std::abs(r.value - std::sqrt(M_PI)) <= 1e-12);
  CHECK(r.abs_error <= 1e-9);
  const auto s = integrate_adaptive<double>([](double x) { return std::sqrt(x); }, 0.0, 1.0);
  CHECK(std::abs(s.value - 2.0 / 3.0) <= 1e-10);
}

TEST_CASE("principal value near a pole") {
  // int_{-1}^{1} 1/(s - p) ds for p just above the segment
  const std::complex<double> p(0.2, 1e-12);
  const auto r = integrate_with_pole([](std::complex<double>) { return std::complex<double>(1.0); }, p, {-1.0, 1.0});
  const auto want = std::log((1.0 - p) / (-1.0 - p));
  CHECK(std::abs(r.value - want) <= 1e-10);
}

TEST_CASE("area quadrature integrates a Gaussian") {
  const auto q = make_area_quadrature(8.0, 8, 16, 16);
  double s = 0.0;
  for (size_t i = 0; i < q.r.size(); ++i) s += q.w[i] * q.dtheta() * q.n_theta * std::exp(-q.r[i] * q.r[i]);
  CHECK(std::abs(s - M_PI) <= 1e-12);
}
