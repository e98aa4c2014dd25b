#include <cmath>

#include "helpers.hpp"
#include "oracle_values.hpp"

#include "abkernel/errors.hpp"
#include "abkernel/kernels.hpp"
#include "abkernel/propagators.hpp"

using namespace abk;
using ut::rel;

TEST_CASE("evolutions at t = 0 are the identity") {
  std::mt19937_64 rng(11);
  const auto s = ut::random_state({0.4, 1.0}, {-3, 3, 4}, rng, 12);
  CHECK(schrodinger_evolve(s, 0.0).data() == s.data());
  CHECK(halfwave_evolve(s, 0.0).data() == s.data());
  StateCoeffs zero(s.config(), s.modes());
  CHECK(wave_solution(s, zero, 0.0).data() == s.data());
}

TEST_CASE("single-mode phases") {
  const auto s = ut::single_mode({0.5, 1.0}, {0, 0});
  CHECK(std::abs(schrodinger_evolve(s, M_PI).at({0, 0}) - 1.0) <= 1e-14);
  // lambda = 4: alpha = 1/2, B0 = 2, k = 0, m = 0
  const FieldConfig c4(0.5, 2.0);
  const auto s4 = ut::single_mode(c4, {0, 0}, {0.3, -0.7});
  CHECK(eigenvalue(c4, {0, 0}) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(halfwave_evolve(s4, M_PI).at({0, 0}) - cplx(0.3, -0.7)) <= 1e-14);
  StateCoeffs zero(c4, s4.modes());
  CHECK(std::abs(wave_solution(s4, zero, M_PI / 2).at({0, 0}) + cplx(0.3, -0.7)) <= 1e-14);
}

TEST_CASE("wave energy is conserved") {
  std::mt19937_64 rng(5);
  const FieldConfig cfg(0.3, 1.0);
  const auto u0 = ut::random_state(cfg, {-4, 4, 6}, rng, 15);
  const auto u1 = ut::random_state(cfg, {-4, 4, 6}, rng, 15);
  const double e0 = wave_energy(u0, u1, 0.0);
  for (double t : {0.3, 1.7}) CHECK(rel(wave_energy(u0, u1, t), e0) <= 1e-12);
}

TEST_CASE("littlewood-paley profile") {
  CHECK(lp_profile(1.0) == doctest::Approx(lp_psi(1.0) - lp_psi(2.0)));
  CHECK(lp_profile(0.5) == 0.0);
  CHECK(lp_profile(2.0) == 0.0);
  CHECK(lp_profile(3.0) == 0.0);
  CHECK(lp_profile(0.4) == 0.0);
  for (int i = 0; i <= 200; ++i) {
    const double x = std::exp(-6.0 + 12.0 * i / 200.0);
    double s = 0.0;
    for (int j = -12; j <= 12; ++j) s += lp_profile(std::ldexp(x, -j));
    CHECK(std::abs(s - 1.0) <= 1e-12);
  }
}

TEST_CASE("frequency_localize") {
  // sqrt(lambda) = 2 at alpha = 1/2, B0 = 2, mode (0,0)
  const auto s = ut::single_mode({0.5, 2.0}, {0, 0});
  CHECK(rel(frequency_localize(s, {1}).at({0, 0}).real(), lp_profile(1.0)) <= 1e-15);
  CHECK(frequency_localize(s, {-2}).at({0, 0}) == cplx(0.0));
  std::mt19937_64 rng(9);
  const auto r = ut::random_state({0.7, 1.0}, {-4, 4, 5}, rng, 20);
  StateCoeffs sum(r.config(), r.modes());
  for (int j = -2; j <= 6; ++j) {
    const auto part = frequency_localize(r, {j});
    for (size_t i = 0; i < sum.data().size(); ++i) sum[i] += part[i];
  }
  for (size_t i = 0; i < sum.data().size(); ++i) CHECK(std::abs(sum[i] - r[i]) <= 1e-12);
}

TEST_CASE("kernel_row reproduces the heat kernel") {
  const FieldConfig cfg(0.5, 1.0);
  const PolarPoint y0{1.0, 0.3};
  const double t = 0.5;
  const ModeSet w = kernel_row_window(cfg, y0, 90.0, 1e-16);
  const auto row = kernel_row(cfg, w, y0, [&](double l) { return cplx(std::exp(-t * l)); });
  for (PolarPoint x : {PolarPoint{1.0, 0.0}, PolarPoint{0.5, 2.0}, PolarPoint{1.8, 4.0}}) {
    const cplx k = heat_kernel_series(cfg, t, x, y0).value;
    CHECK(std::abs(synthesize(row, x) - k) <= 1e-10 * std::abs(heat_kernel_series(cfg, t, y0, y0).value));
  }
  const auto zero = kernel_row(cfg, w, y0, [](double) { return cplx(0.0); });
  CHECK(zero.nonzero_count() == 0);
  CHECK_THROWS_AS(kernel_row_window(cfg, {0.0, 0.0}, 10.0), DomainError);
}

TEST_CASE("sup_norm of single modes") {
  const FieldConfig cfg(0.5, 1.0);
  const auto a = sup_norm(ut::single_mode(cfg, {0, 0}));
  CHECK(rel(a.value, oracle::kSupMode_0p5_k0_m0) <= 1e-8);
  // closed form at u = alpha_k for m = 0
  const double closed = std::sqrt(1.0 / (2 * M_PI)) * std::pow(0.5 / M_E, 0.25) / std::sqrt(std::tgamma(1.5));
  CHECK(rel(a.value, closed) <= 1e-8);
  CHECK(rel(sup_norm(ut::single_mode(cfg, {1, 2})).value, oracle::kSupMode_0p5_k1_m2) <= 1e-8);
  CHECK(sup_norm(StateCoeffs(cfg, {-1, 1, 1})).value == 0.0);
  const auto c = sup_norm(ut::single_mode(cfg, {1, 2}, {0.0, -3.0}));
  CHECK(rel(c.value, 3.0 * oracle::kSupMode_0p5_k1_m2) <= 1e-8);
}

TEST_CASE("sup_norm rejects a grid that cuts off the state") {
  GridSpec g;
  g.r_max = 1.0;
  CHECK_THROWS_AS(sup_norm(ut::single_mode({0.5, 1.0}, {0, 3}), g), GridTooSmallError);
}

TEST_CASE("subordination identities") {
  auto a = subordination_heat_check(1.0, 2.0);
  CHECK(std::abs(a.lhs - std::exp(-2.0)) <= 1e-15);
  CHECK(a.abs_diff() <= 1e-10);
  auto b = subordination_heat_check(4.0, 0.5);
  CHECK(std::abs(b.lhs - std::exp(-1.0)) <= 1e-15);
  CHECK(b.abs_diff() <= 1e-10);
  CHECK(std::abs(subordination_heat_check(1.0, 1e-6).rhs - 1.0) <= 1e-5);

  const auto h = subordination_halfwave_check(4.0, 1.0);
  CHECK(std::abs(h.lhs - std::exp(cplx(0.0, 2.0))) <= 1e-15);
  CHECK(h.abs_diff() <= 1e-4);
  const auto u = subordination_halfwave_check(1.0, 2 * M_PI);
  CHECK(std::abs(u.lhs - 1.0) <= 1e-14);
  const cplx p = subordination_halfwave_eps(2.0, 0.7, 0.05);
  const cplx m = subordination_halfwave_eps(2.0, -0.7, 0.05);
  CHECK(std::abs(p - std::conj(m)) <= 1e-10);
  CHECK(std::abs(p - std::exp(-cplx(0.05, -0.7) * std::sqrt(2.0))) <= 1e-8);
}
