#include <cmath>

#include "helpers.hpp"
#include "oracle_values.hpp"

#include "abkernel/errors.hpp"
#include "abkernel/specfun.hpp"
#include "abkernel/spectrum.hpp"

using namespace abk;
using ut::rel;

TEST_CASE("FieldConfig rejects invalid flux and field") {
  CHECK_THROWS_AS(FieldConfig(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(FieldConfig(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(FieldConfig(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(PolarPoint(-1.0, 0.0), DomainError);
}

TEST_CASE("eigenvalue") {
  CHECK(eigenvalue({0.5, 1.0}, {0, 0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eigenvalue({0.5, 1.0}, {-1, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eigenvalue({0.25, 2.0}, {1, 2}) == doctest::Approx(15.0).epsilon(1e-15));
}

TEST_CASE("mode_norm_sq") {
  const double ref = M_PI * std::tgamma(1.5);
  CHECK(rel(mode_norm_sq({0.5, 2.0}, {0, 0}), ref) <= 1e-14);
  CHECK(rel(mode_norm_sq({0.5, 2.0}, {-1, 0}), ref) <= 1e-14);
  CHECK(rel(mode_norm_sq({0.5, 2.0}, {0, 0}), oracle::kModeNormSq_0p5_2_0_0) <= 1e-14);
  CHECK(rel(mode_norm_sq({0.3, 1.0}, {2, 3}), oracle::kModeNormSq_0p3_1_2_3) <= 1e-8);
}

TEST_CASE("eigenfunction") {
  const FieldConfig cfg(0.3, 1.0);
  CHECK(eigenfunction(cfg, {1, 2}, {0.0, 1.0}, false) == cplx(0.0, 0.0));
  CHECK(std::abs(eigenfunction({0.5, 1.0}, {0, 0}, {1.0, 0.0}, false) - 0.7788007830714049) <= 1e-15);
  const cplx v = eigenfunction(cfg, {1, 2}, {1.7, 2.1}, false);
  CHECK(rel(v, cplx(oracle::kEigenfunction_0p3_1_k1_m2_re, oracle::kEigenfunction_0p3_1_k1_m2_im)) <= 1e-12);
  const cplx n = eigenfunction(cfg, {1, 2}, {1.7, 2.1}, true);
  CHECK(rel(n, cplx(oracle::kEigenfunctionNormalized_0p3_1_k1_m2_re,
                    oracle::kEigenfunctionNormalized_0p3_1_k1_m2_im)) <= 1e-12);
  CHECK(rel(normalized_radial(cfg, {1, 2}, 1.7), std::abs(n)) <= 1e-13);
}

TEST_CASE("multiplicity_in_window") {
  CHECK(multiplicity_in_window({0.3, 1.0}, 1.0, {-6, 6, 6}, 1e-9) == 6);
  CHECK(multiplicity_in_window({0.3, 1.0}, 0.5, {-6, 6, 6}, 1e-9) == 0);
  // modes with k <= -1 give odd multiples of B0 at alpha = 1/2, so only (0,0) sits at 2
  CHECK(multiplicity_in_window({0.5, 1.0}, 2.0, {-3, 3, 3}, 1e-9) == 1);
}

TEST_CASE("expand recovers single modes and linear combinations") {
  const FieldConfig cfg(0.5, 1.0);
  const ModeSet ms{-2, 2, 4};
  auto s = expand(cfg, [&](PolarPoint p) { return eigenfunction(cfg, {0, 0}, p, true); }, ms);
  for (size_t i = 0; i < ms.size(); ++i) CHECK(std::abs(s[i] - (ms.at(i) == ModeIndex{0, 0} ? 1.0 : 0.0)) <= 1e-10);

  auto f = [&](PolarPoint p) {
    return 2.5 * eigenfunction(cfg, {1, 2}, p, true) + cplx(0, 1) * eigenfunction(cfg, {-1, 0}, p, true);
  };
  s = expand(cfg, f, ms);
  for (size_t i = 0; i < ms.size(); ++i) {
    const ModeIndex mi = ms.at(i);
    const cplx want = mi == ModeIndex{1, 2} ? cplx(2.5) : mi == ModeIndex{-1, 0} ? cplx(0, 1) : cplx(0);
    CHECK(std::abs(s[i] - want) <= 1e-10);
  }
}

TEST_CASE("expand a Gaussian bump") {
  const FieldConfig cfg(0.5, 1.0);
  const ModeSet ms{-1, 1, 3};
  const auto s = expand(cfg, [](PolarPoint p) { return cplx(std::exp(-p.r * p.r)); }, ms);
  const double want[4] = {oracle::kGaussCoeff_m0, oracle::kGaussCoeff_m1, oracle::kGaussCoeff_m2,
                          oracle::kGaussCoeff_m3};
  for (int m = 0; m <= 3; ++m) CHECK(std::abs(s.at({0, m}) - want[m]) <= 1e-8);
  for (int m = 0; m <= 3; ++m) {
    CHECK(std::abs(s.at({1, m})) <= 1e-10);
    CHECK(std::abs(s.at({-1, m})) <= 1e-10);
  }
}

TEST_CASE("synthesize") {
  const FieldConfig cfg(0.3, 1.3);
  const ModeSet ms{-3, 3, 5};
  StateCoeffs zero(cfg, ms);
  CHECK(synthesize(zero, {1.0, 0.4}) == cplx(0.0, 0.0));
  const auto one = ut::single_mode(cfg, {0, 0});
  CHECK(std::abs(synthesize(one, {0.8, 1.1}) - eigenfunction(cfg, {0, 0}, {0.8, 1.1}, true)) <= 1e-15);

  std::mt19937_64 rng(7);
  const auto s = ut::random_state(cfg, ms, rng, 10);
  for (PolarPoint p : {PolarPoint{0.1, 0.0}, PolarPoint{0.7, 2.0}, PolarPoint{1.5, 4.0}, PolarPoint{2.2, 5.5},
                       PolarPoint{3.9, 0.3}}) {
    cplx direct(0.0, 0.0);
    for (size_t i = 0; i < ms.size(); ++i)
      if (s[i] != cplx(0.0)) direct += s[i] * eigenfunction(cfg, ms.at(i), p, true);
    CHECK(std::abs(synthesize(s, p) - direct) <= 1e-13 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("apply_multiplier") {
  const FieldConfig cfg(0.5, 1.0);
  std::mt19937_64 rng(3);
  const auto s = ut::random_state(cfg, {-2, 2, 3}, rng, 8);
  const auto id = apply_multiplier(s, [](double) { return cplx(1.0); });
  CHECK(id.data() == s.data());
  const auto h = apply_multiplier(ut::single_mode(cfg, {0, 0}), [](double l) { return cplx(std::exp(-l)); });
  CHECK(rel(h.at({0, 0}).real(), std::exp(-2.0)) <= 1e-15);
}

TEST_CASE("Gram matrix and finite-difference residual") {
  const FieldConfig cfg(0.3, 1.0);
  const ModeSet w{-2, 2, 3};
  const auto g = gram_matrix(cfg, w);
  const size_t n = w.size();
  double worst = 0.0;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) worst = std::max(worst, std::abs(g[a * n + b] - (a == b ? 1.0 : 0.0)));
  CHECK(worst <= 1e-8);
  const double r1 = fd_eigen_residual(cfg, {1, 2}, 2e-3);
  const double r2 = fd_eigen_residual(cfg, {1, 2}, 1e-3);
  CHECK(r2 <= 1e-4);
  CHECK(std::log2(r1 / r2) == doctest::Approx(2.0).epsilon(0.1));
}
