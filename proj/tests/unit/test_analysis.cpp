#include <cmath>

#include "helpers.hpp"

#include "abkernel/analysis.hpp"
#include "abkernel/errors.hpp"

using namespace abk;
using ut::rel;

TEST_CASE("sobolev_norm") {
  std::mt19937_64 rng(17);
  const FieldConfig cfg(0.35, 1.5);
  const auto s = ut::random_state(cfg, {-3, 3, 4}, rng, 10);
  CHECK(rel(sobolev_norm(s, 0.0), s.l2_norm()) <= 1e-15);
  double direct = 0.0;
  for (size_t i = 0; i < s.data().size(); ++i) direct += std::pow(eigenvalue(cfg, s.modes().at(i)), 1.5) * std::norm(s[i]);
  CHECK(rel(sobolev_norm(s, 1.5), std::sqrt(direct)) <= 1e-14);
  CHECK(rel(sobolev_norm(ut::single_mode({0.5, 1.0}, {0, 0}), 1.0), std::sqrt(2.0)) <= 1e-15);
}

TEST_CASE("admissibility") {
  const auto a = make_admissible_pair(8, 4);
  CHECK(a.s == doctest::Approx(0.375));
  CHECK(make_admissible_pair(6, 6).s == doctest::Approx(0.5));
  CHECK(make_admissible_pair(kInf, 2).s == doctest::Approx(0.0));
  CHECK_THROWS_AS(make_admissible_pair(2, kInf), AdmissibilityError);
  CHECK_THROWS_AS(make_admissible_pair(4, 12), AdmissibilityError);
  CHECK_THROWS_AS(make_admissible_pair(1, 4), AdmissibilityError);
  const auto r = admissibility(4, 12);
  CHECK(r.range_ok);
  CHECK_FALSE(r.gap_ok);
  CHECK(r.gap_lhs == doctest::Approx(0.5));
}

TEST_CASE("zero state norms") {
  const StateCoeffs z({0.5, 1.0}, {-2, 2, 2});
  CHECK(sobolev_norm(z, 1.0) == 0.0);
  CHECK(lp_norm(z, 4.0) == 0.0);
  CHECK(besov_norm(z, 0.5, 2.0, 2.0) == 0.0);
  CHECK_THROWS_AS(square_function_ratio(z, 2.0), DomainError);
  CHECK_THROWS_AS(square_function_ratio_coeff(z), DomainError);
}

TEST_CASE("lp_norm at p = 2 equals the coefficient norm") {
  std::mt19937_64 rng(23);
  const auto s = ut::random_state({0.6, 1.0}, {-3, 3, 4}, rng, 9);
  CHECK(rel(lp_norm(s, 2.0), s.l2_norm()) <= 1e-9);
}

TEST_CASE("besov p = r = 2 agrees with the coefficient formula") {
  std::mt19937_64 rng(29);
  const auto s = ut::random_state({0.6, 1.0}, {-3, 3, 4}, rng, 9);
  for (double sv : {0.0, 0.5, 1.0}) {
    const double quad = besov_norm(s, sv, 2.0, 2.0) / sobolev_norm(s, sv);
    CHECK(rel(quad, besov_sobolev_ratio_coeff(s, sv)) <= 1e-8);
    CHECK(quad >= 0.5);
    CHECK(quad <= 2.0);
  }
}

TEST_CASE("bernstein with p = q is bounded by one") {
  std::mt19937_64 rng(31);
  const auto s = ut::random_state({0.5, 1.0}, {-3, 3, 4}, rng, 12);
  for (int j = 0; j <= 2; ++j)
    if (frequency_localize(s, {j}).nonzero_count() > 0) CHECK(bernstein_ratio(s, j, 4.0, 4.0) <= 1.0 + 1e-8);
}

TEST_CASE("square function ratio at p = 2") {
  std::mt19937_64 rng(37);
  const auto s = ut::random_state({0.5, 1.0}, {-3, 3, 4}, rng, 12);
  const double c = square_function_ratio_coeff(s);
  CHECK(c >= 1.0 / std::sqrt(2.0) - 1e-12);
  CHECK(c <= 1.0 + 1e-12);
  CHECK(rel(square_function_ratio(s, 2.0), c) <= 1e-8);
}

TEST_CASE("decay regime") {
  CHECK(decay_regime_nonempty(4, 1.0));
  CHECK_FALSE(decay_regime_nonempty(0, 8.0));
  CHECK(in_decay_regime(4, 1.0, 0.1));
  CHECK_FALSE(in_decay_regime(4, 1.0, 0.01));
  CHECK_THROWS_AS(decay_fit({0.5, 8.0}, 0, {1.0, 0.0}, {0.1, 0.2}), EmptyRegimeError);
  CHECK_THROWS_AS(decay_fit({0.5, 1.0}, 4, {1.0, 0.0}, {0.01, 0.1}), DomainError);
}

TEST_CASE("fit_decay recovers an exact power law") {
  std::vector<double> t, s;
  for (int i = 0; i < 8; ++i) {
    t.push_back(0.1 * (i + 1));
    s.push_back(3.0 * 256.0 * std::pow(1.0 + 16.0 * t.back(), -0.5));
  }
  const auto f = fit_decay(4, t, s);
  CHECK(f.fitted_exponent == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(f.fitted_constant == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("strichartz refinement is stable for smooth data") {
  const FieldConfig cfg(0.5, 1.0);
  const auto u0 = expand(cfg, [](PolarPoint p) { return cplx(std::exp(-0.5 * std::pow(p.x() - 2.0, 2) - 0.5 * p.y() * p.y())); }, {-6, 6, 12});
  const StateCoeffs u1(u0.config(), u0.modes());
  StrichartzGrid g;
  const auto a = strichartz_norm(u0, u1, make_admissible_pair(8, 4), 1.0, g);
  g.time_intervals *= 2;
  g.space.refine = 2;
  const auto b = strichartz_norm(u0, u1, make_admissible_pair(8, 4), 1.0, g);
  CHECK(std::isfinite(a.ratio()));
  CHECK(std::abs(b.ratio() / a.ratio() - 1.0) <= 0.05);
}
