#include <cmath>
#include <random>

#include "helpers.hpp"

#include "abkernel/kernels.hpp"
#include "abkernel/propagators.hpp"
#include "abkernel/specfun.hpp"

using namespace abk;
using ut::rel;

namespace {

FieldConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(0.05, 0.95), b(0.3, 3.0);
  return {a(rng), b(rng)};
}

PolarPoint random_point(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> r(0.05, rmax), t(0.0, 2 * M_PI);
  return {r(rng), t(rng)};
}

} // namespace

TEST_CASE("property: eigenvalues never fall below B0") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> k(-50, 50), m(0, 50);
  for (int i = 0; i < 500; ++i) {
    const auto cfg = random_config(rng);
    CHECK(eigenvalue(cfg, {k(rng), m(rng)}) >= cfg.b0 * (1 - 1e-14));
  }
}

TEST_CASE("property: bessel_i is nonincreasing in order") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> z(0.01, 60.0), nu(0.0, 30.0);
  for (int i = 0; i < 100; ++i) {
    const double x = z(rng);
    double lo = nu(rng), hi = nu(rng);
    if (lo > hi) std::swap(lo, hi);
    CHECK(bessel_i(hi, x).value <= bessel_i(lo, x).value * (1 + 1e-12));
  }
}

TEST_CASE("property: pkm_poly is the rescaled laguerre polynomial") {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> a(0.01, 12.0), x(0.0, 40.0);
  std::uniform_int_distribution<unsigned> m(0, 10);
  for (int i = 0; i < 200; ++i) {
    const double ak = a(rng), r = x(rng);
    const unsigned n = m(rng);
    double direct = 0.0, term = 1.0;
    for (unsigned j = 0; j <= n; ++j) {
      direct += term;
      term *= (-static_cast<double>(n) + j) / (1.0 + ak + j) * r / (j + 1.0);
    }
    const double scale = std::max(1.0, std::abs(laguerre(ak, n, r)) / binom_shift(ak, n));
    CHECK(std::abs(pkm_poly(ak, n, r) - laguerre(ak, n, r) / binom_shift(ak, n)) <= 1e-11 * scale);
    double mag = 0.0, t2 = 1.0;
    for (unsigned j = 0; j <= n; ++j) {
      mag += std::abs(t2);
      t2 *= (-static_cast<double>(n) + j) / (1.0 + ak + j) * r / (j + 1.0);
    }
    CHECK(std::abs(pkm_poly(ak, n, r) - direct) <= 1e-12 * mag);
  }
}

TEST_CASE("property: laguerre three-term recurrence") {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> a(0.0, 5.0), x(0.0, 50.0);
  std::uniform_int_distribution<unsigned> m(1, 60);
  for (int i = 0; i < 200; ++i) {
    const double al = a(rng), u = x(rng);
    const unsigned n = m(rng);
    const double lp = laguerre(al, n + 1, u), l0 = laguerre(al, n, u), lm = laguerre(al, n - 1, u);
    const double res = (n + 1) * lp - (2 * n + 1 + al - u) * l0 + (n + al) * lm;
    const double scale = (n + 1) * std::abs(lp) + std::abs(2 * n + 1 + al - u) * std::abs(l0) + (n + al) * std::abs(lm);
    CHECK(std::abs(res) <= 1e-12 * scale);
  }
}

TEST_CASE("property: heat kernel is Hermitian and positive on the diagonal") {
  std::mt19937_64 rng(113);
  std::uniform_real_distribution<double> t(0.05, 1.5);
  for (int i = 0; i < 30; ++i) {
    const auto cfg = random_config(rng);
    const double tt = t(rng);
    const auto x = random_point(rng, 3.0), y = random_point(rng, 3.0);
    const cplx kxy = heat_kernel(cfg, tt, x, y).value, kyx = heat_kernel(cfg, tt, y, x).value;
    CHECK(std::abs(kxy - std::conj(kyx)) <= 1e-11 * std::abs(kxy) + 1e-300);
    const cplx d = heat_kernel(cfg, tt, x, x).value;
    CHECK(d.real() > 0.0);
    CHECK(std::abs(d.imag()) <= 1e-12 * d.real());
  }
}

TEST_CASE("property: series and closed form agree") {
  std::mt19937_64 rng(127);
  std::uniform_real_distribution<double> t(0.05, 1.0);
  for (int i = 0; i < 20; ++i) {
    const auto cfg = random_config(rng);
    const double tt = t(rng);
    const auto x = random_point(rng, 2.5), y = random_point(rng, 2.5);
    const cplx a = heat_kernel_series(cfg, tt, x, y).value, b = heat_kernel_closed(cfg, tt, x, y).value;
    CHECK(rel(b, a) <= 1e-8);
  }
}

TEST_CASE("property: heat semigroup contracts with the spectral gap") {
  std::mt19937_64 rng(131);
  for (int i = 0; i < 50; ++i) {
    const auto cfg = random_config(rng);
    const auto s = ut::random_state(cfg, {-6, 6, 8}, rng, 20);
    const double t = std::uniform_real_distribution<double>(0.0, 3.0)(rng);
    const auto h = apply_multiplier(s, [t](double l) { return cplx(std::exp(-t * l)); });
    CHECK(h.l2_norm() <= std::exp(-t * cfg.b0) * s.l2_norm() * (1 + 1e-15));
  }
}

TEST_CASE("property: unitary evolutions and the half-wave group law") {
  std::mt19937_64 rng(137);
  std::uniform_real_distribution<double> tt(-20.0, 20.0);
  for (int i = 0; i < 50; ++i) {
    const auto cfg = random_config(rng);
    const auto s = ut::random_state(cfg, {-6, 6, 8}, rng, 25);
    const double t = tt(rng), u = tt(rng);
    CHECK(rel(schrodinger_evolve(s, t).l2_norm(), s.l2_norm()) <= 1e-14);
    CHECK(rel(halfwave_evolve(s, t).l2_norm(), s.l2_norm()) <= 1e-14);
    const auto a = halfwave_evolve(halfwave_evolve(s, t), u), b = halfwave_evolve(s, t + u);
    for (size_t k = 0; k < a.data().size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-12 * (1 + std::abs(s[k])));
  }
}

TEST_CASE("property: wave solution matches its initial data") {
  std::mt19937_64 rng(139);
  for (int i = 0; i < 10; ++i) {
    const auto cfg = random_config(rng);
    const auto u0 = ut::random_state(cfg, {-4, 4, 4}, rng, 10);
    const auto u1 = ut::random_state(cfg, {-4, 4, 4}, rng, 10);
    const double h = 1e-6;
    const auto p = wave_solution(u0, u1, h), m = wave_solution(u0, u1, -h);
    for (size_t k = 0; k < u0.data().size(); ++k) {
      const double lam = eigenvalue(cfg, u0.modes().at(k));
      const cplx fd = (p[k] - m[k]) / (2 * h);
      CHECK(std::abs(fd - u1[k]) <= 1e-8 * (1 + lam) * (std::abs(u0[k]) + std::abs(u1[k]) + 1));
      CHECK(std::abs(wave_velocity(u0, u1, 0.0)[k] - u1[k]) <= 1e-15 * (1 + std::abs(u1[k])));
    }
  }
}

TEST_CASE("property: expand inverts synthesize") {
  std::mt19937_64 rng(149);
  for (int i = 0; i < 3; ++i) {
    const auto cfg = random_config(rng);
    const ModeSet ms{-3, 3, 5};
    const auto s = ut::random_state(cfg, ms, rng, 8);
    const auto e = expand(cfg, [&](PolarPoint p) { return synthesize(s, p); }, ms);
    for (size_t k = 0; k < ms.size(); ++k) CHECK(std::abs(e[k] - s[k]) <= 1e-9 * (1 + s.l2_norm()));
  }
}

TEST_CASE("property: sup_norm is homogeneous") {
  std::mt19937_64 rng(151);
  for (int i = 0; i < 5; ++i) {
    const auto cfg = random_config(rng);
    const auto s = ut::random_state(cfg, {-3, 3, 3}, rng, 6);
    const cplx c(std::normal_distribution<double>()(rng), std::normal_distribution<double>()(rng));
    auto cs = s;
    for (auto& v : cs.data()) v *= c;
    CHECK(rel(sup_norm(cs).value, std::abs(c) * sup_norm(s).value) <= 1e-12);
  }
}
