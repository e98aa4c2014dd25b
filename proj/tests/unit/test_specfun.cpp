#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracle_values.hpp"

#include "abkernel/errors.hpp"
#include "abkernel/quadrature.hpp"
#include "abkernel/specfun.hpp"

using namespace abk;
using ut::rel;

TEST_CASE("gamma_fn at factorials and one half") {
  CHECK(rel(gamma_fn(1.0), 1.0) <= 1e-14);
  CHECK(rel(gamma_fn(5.0), 24.0) <= 1e-14);
  CHECK(rel(gamma_fn(0.5), 1.7724538509055160) <= 1e-14);
  CHECK(rel(gamma_fn(171.0), std::exp(std::lgamma(171.0))) <= 1e-12);
  CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);
}

TEST_CASE("gamma_fn duplication formula") {
  for (double x : {0.3, 1.7, 4.25, 20.5, 60.1}) {
    const double lhs = gamma_fn(x) * gamma_fn(x + 0.5);
    const double rhs = std::pow(2.0, 1.0 - 2.0 * x) * std::sqrt(M_PI) * gamma_fn(2.0 * x);
    CHECK(rel(lhs, rhs) <= 1e-13);
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(pochhammer(0.5, 2) == 0.75);
}

TEST_CASE("laguerre") {
  CHECK(laguerre(0.3, 0, 7.7) == 1.0);
  CHECK(std::abs(laguerre(1.0, 1, 2.0)) <= 1e-15);
  CHECK(rel(laguerre(0.3, 7, 4.4), oracle::kLaguerre_0p3_7_4p4) <= 1e-12);
  CHECK(rel(laguerre(2.5, 12, 30.0), oracle::kLaguerre_2p5_12_30) <= 1e-12);
  CHECK_THROWS_AS(laguerre(-1.0, 2, 1.0), DomainError);
}

TEST_CASE("laguerre orthogonality of degrees 2 and 3") {
  const Rule& g = gauss_laguerre(24, 0.5);
  double s = 0.0;
  for (size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * laguerre(0.5, 2, g.x[i]) * laguerre(0.5, 3, g.x[i]);
  CHECK(std::abs(s) <= 1e-10);
}

TEST_CASE("pkm_poly") {
  CHECK(pkm_poly(0.5, 0, 3.2) == 1.0);
  CHECK(std::abs(pkm_poly(0.5, 1, 1.5)) <= 1e-15);
  CHECK(rel(pkm_poly(0.7, 4, 2.1), oracle::kPkm_0p7_4_2p1) <= 1e-12);
  double direct = 0.0;
  for (unsigned n = 0; n <= 4; ++n)
    direct += pochhammer(-4.0, n) / pochhammer(1.7, n) * std::pow(2.1, n) / std::tgamma(n + 1.0);
  CHECK(rel(pkm_poly(0.7, 4, 2.1), direct) <= 1e-11);
}

TEST_CASE("laguerre_functions are orthonormal") {
  const double a = 0.4;
  const int M = 10;
  const Rule& g = gauss_laguerre(M + 2, a);
  std::vector<double> gram((M + 1) * (M + 1), 0.0);
  for (size_t i = 0; i < g.x.size(); ++i) {
    const auto psi = laguerre_functions(a, g.x[i], M);
    const double w = g.w[i] * std::exp(g.x[i] - a * std::log(g.x[i]));
    for (int m = 0; m <= M; ++m)
      for (int n = 0; n <= M; ++n) gram[m * (M + 1) + n] += w * psi[m] * psi[n];
  }
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n <= M; ++n) CHECK(std::abs(gram[m * (M + 1) + n] - (m == n ? 1.0 : 0.0)) <= 1e-12);
  const auto far = laguerre_functions(0.3, 900.0, 5);
  for (double v : far) CHECK(std::isfinite(v));
}

TEST_CASE("bessel_i values") {
  CHECK(bessel_i(0.0, 0.0).value == 1.0);
  CHECK(bessel_i(1.3, 0.0).value == 0.0);
  CHECK(rel(bessel_i(0.5, 1.0).value, std::sqrt(2.0 / M_PI) * std::sinh(1.0)) <= 1e-13);
  CHECK(rel(bessel_i(0.5, 1.0).value, oracle::kBesselI_0p5_1) <= 1e-13);
  CHECK(rel(bessel_i(0.3, 2.5).value, oracle::kBesselI_0p3_2p5) <= 1e-12);
  CHECK(rel(bessel_i(2.7, 0.01).value, oracle::kBesselI_2p7_0p01) <= 1e-12);
  CHECK(rel(bessel_i(7.25, 3.0).value, oracle::kBesselI_7p25_3) <= 1e-12);
  CHECK(rel(bessel_i_scaled(10.5, 35.0).value, oracle::kBesselIScaled_10p5_35) <= 1e-10);
  CHECK(rel(bessel_i_scaled(0.0, 100.0).value, oracle::kBesselIScaled_0_100) <= 1e-10);
  CHECK(rel(bessel_i_scaled(40.0, 45.0).value, oracle::kBesselIScaled_40_45) <= 1e-10);
  CHECK_THROWS_AS(bessel_i(-0.5, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_i(0.5, -1.0), DomainError);
  CHECK_THROWS_AS(bessel_i(0.0, 800.0), OverflowError);
}

TEST_CASE("bessel_i series and integral routes agree") {
  for (double nu : {0.0, 0.3, 2.5, 9.9})
    for (double x : {0.5, 2.5, 12.0, 31.0}) {
      const double s = bessel_i_scaled_series(nu, x).value;
      const auto q = bessel_i_scaled_integral(nu, x);
      // the integral route cancels to absolute, not relative, accuracy
      CHECK(std::abs(q.value - s) <= std::max(1e-10 * s, q.abs_error_estimate));
    }
  CHECK(rel(bessel_i_scaled_integral(0.3, 2.5).value, bessel_i_scaled_series(0.3, 2.5).value) <= 1e-10);
}

TEST_CASE("bessel_i ratio bound") {
  for (double nu : {0.0, 0.5, 3.0, 20.0})
    for (double x : {0.1, 1.0, 10.0, 100.0}) {
      const double r = bessel_i_scaled(nu + 1, x).value / bessel_i_scaled(nu, x).value;
      CHECK(r <= bessel_i_ratio_bound(nu, x) * (1 + 1e-12));
    }
}
