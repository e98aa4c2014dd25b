#include <cmath>

#include "helpers.hpp"
#include "oracle_values.hpp"

#include "abkernel/kernels.hpp"

using namespace abk;
using ut::rel;

namespace {

struct Case {
  double alpha, b0, t;
  PolarPoint x, y;
  cplx want;
};

const Case kCases[] = {
    {0.5, 1.0, 0.5, {1.0, 0.0}, {1.0, 0.0}, {oracle::kHeat_a0p5_t0p5_diag_re, oracle::kHeat_a0p5_t0p5_diag_im}},
    {0.5, 1.0, 0.25, {1.0, 0.3}, {0.5, 2.0}, {oracle::kHeat_a0p5_t0p25_re, oracle::kHeat_a0p5_t0p25_im}},
    {0.1, 2.0, 0.05, {2.5, M_PI}, {0.2, 0.0}, {oracle::kHeat_a0p1_b2_t0p05_re, oracle::kHeat_a0p1_b2_t0p05_im}},
    {0.9, 0.5, 1.0, {1.0, 5.0}, {2.5, 0.0}, {oracle::kHeat_a0p9_b0p5_t1_re, oracle::kHeat_a0p9_b0p5_t1_im}},
    {0.5, 1.0, 0.7, {1.2, M_PI}, {0.9, 0.0}, {oracle::kHeat_a0p5_t0p7_opposite_re, oracle::kHeat_a0p5_t0p7_opposite_im}},
};

} // namespace

TEST_CASE("heat kernel series matches the high-precision oracle") {
  for (const auto& c : kCases) {
    const auto v = heat_kernel_series({c.alpha, c.b0}, c.t, c.x, c.y);
    CHECK(rel(v.value, c.want) <= 1e-11);
  }
}

TEST_CASE("heat kernel closed form matches the high-precision oracle") {
  for (const auto& c : kCases) {
    const auto v = heat_kernel_closed({c.alpha, c.b0}, c.t, c.x, c.y);
    CHECK(rel(v.value, c.want) <= 1e-10);
  }
}

TEST_CASE("Mehler kernel and the alpha = 0 closed form") {
  const PolarPoint x{1.0, 0.0}, y{1.0, M_PI / 2};
  const cplx want(oracle::kHeat_a0_t0p5_quarter_re, oracle::kHeat_a0_t0p5_quarter_im);
  CHECK(rel(mehler_kernel(1.0, 0.5, x, y).value, want) <= 1e-13);
  CHECK(rel(heat_kernel_closed_alpha(0.0, 1.0, 0.5, x, y).value, want) <= 1e-12);
  const cplx diag = mehler_kernel(1.0, 0.5, x, x).value;
  CHECK(rel(diag, cplx(1.0 / (4 * M_PI * std::sinh(0.5)), 0.0)) <= 1e-15);
}

TEST_CASE("heat kernel at the origin vanishes") {
  CHECK(std::abs(heat_kernel_series({0.4, 1.0}, 0.3, {0.0, 0.0}, {1.0, 0.5}).value) == 0.0);
}

TEST_CASE("phase factor is unimodular") {
  for (double t1 : {0.0, 1.0, 3.0, 6.0})
    for (double t2 : {0.0, 2.5, 5.9}) CHECK(std::abs(std::abs(phase_factor(0.3, t1, t2).value) - 1.0) <= 1e-15);
}

TEST_CASE("small t B0 uses the closed form") {
  const FieldConfig cfg(0.5, 1.0);
  const auto v = heat_kernel(cfg, 5e-5, {1.0, 0.0}, {1.0, 0.0});
  CHECK(v.method == KernelMethod::closed_form);
  CHECK(rel(v.value.real(), 1.0 / (4 * M_PI * 5e-5)) <= 1e-3);
}

TEST_CASE("sector distance") {
  CHECK(sector_distance({0.0, 1.0}, {3.0, 4.0}) == doctest::Approx(2.0).epsilon(1e-15));
  AnnularSector a{1.0, 2.0, 0.0, 0.5}, b{1.0, 2.0, M_PI, M_PI + 0.5};
  CHECK(sector_distance(a, b) == doctest::Approx(2.0 * std::sin((M_PI - 0.5) / 2)).epsilon(1e-12));
}

TEST_CASE("Davies-Gaffney with zero data") {
  const AnnularSector a{0.0, 1.0}, b{3.0, 4.0};
  const auto r = davies_gaffney_check({0.5, 1.0}, 0.1, a, b, [](PolarPoint) { return cplx(0.0); },
                                      [](PolarPoint) { return cplx(1.0); });
  CHECK(r.lhs == 0.0);
  CHECK(r.lhs <= r.rhs);
}

TEST_CASE("semigroup residual at the reference configuration") {
  CHECK(semigroup_residual({0.5, 1.0}, 0.2, 0.3, {1.0, 0.0}, PolarPoint::from_cartesian(0.8, 1.0)) <= 1e-5);
}

TEST_CASE("Bessel integral identity") {
  CHECK(bessel_integral_identity_check({0.0, 0.0}, 1.0).abs_diff() <= 1e-8);
  const auto r = bessel_integral_identity_check({0.0, 1.2}, 2.0);
  CHECK(r.abs_diff() <= 1e-8 * std::max(1.0, std::abs(r.rhs)));
  CHECK(std::abs(bessel_identity_jump(0.3, 1.0).extrapolated) <= 1e-4);
}
