#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <tuple>

#include "abkernel/analysis.hpp"
#include "abkernel/errors.hpp"
#include "abkernel/kernels.hpp"
#include "abkernel/propagators.hpp"
#include "abkernel/quadrature.hpp"
#include "abkernel/specfun.hpp"
#include "abkernel/spectrum.hpp"

namespace abkcli {

namespace {

using abk::cplx;
using abk::FieldConfig;
using abk::ModeIndex;
using abk::ModeSet;
using abk::PolarPoint;
using abk::StateCoeffs;

struct Suite {
  std::string name;
  SuiteOptions opt;
  std::vector<Check> out;

  void upper(const std::string& check, const std::string& anchor, double measured, double bound, double tol,
             const std::string& note = "") {
    out.push_back({name, check, anchor, measured <= bound + tol, measured, "<=", bound, tol, note});
  }
  void lower(const std::string& check, const std::string& anchor, double measured, double bound, double tol,
             const std::string& note = "") {
    out.push_back({name, check, anchor, measured >= bound - tol, measured, ">=", bound, tol, note});
  }
  // Exploratory value: only finiteness is asserted.
  void record(const std::string& check, const std::string& anchor, double measured, const std::string& note = "") {
    out.push_back({name, check, anchor, std::isfinite(measured), measured, "finite", 0.0, 0.0, note});
  }
  // Runs body; an exception becomes a failed record under the given name.
  void guard(const std::string& check, const std::string& anchor, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out.push_back({name, check, anchor, false, NAN, "", 0.0, 0.0, std::string("error: ") + e.what()});
    }
  }
};

ModeSet window(int kmin, int kmax, int mmax) {
  ModeSet w;
  w.k_min = kmin;
  w.k_max = kmax;
  w.m_max = mmax;
  return w;
}

StateCoeffs random_state(const FieldConfig& cfg, const ModeSet& ms, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  StateCoeffs s(cfg, ms);
  for (size_t i = 0; i < ms.size(); ++i) s[i] = cplx(n(rng), n(rng));
  return s;
}

// Sparse states on |k| <= 4, m <= 4 with one to six nonzero modes.
std::vector<StateCoeffs> sparse_states(const FieldConfig& cfg, int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kd(-4, 4), md(0, 4), nd(1, 6);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<StateCoeffs> out;
  for (int i = 0; i < count; ++i) {
    StateCoeffs s(cfg, window(-4, 4, 4));
    const int terms = nd(rng);
    for (int q = 0; q < terms; ++q) s.set({kd(rng), md(rng)}, cplx(n(rng), n(rng)));
    out.push_back(s);
  }
  return out;
}

double diff_norm(const StateCoeffs& a, const StateCoeffs& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.data().size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

void specfun_suite(Suite& s) {
  s.guard("generating identity sum_k e^{kt} I_|k|(z) = e^{z cosh t}", "Bessel generating function", [&] {
    double worst = 0.0;
    for (double z : {0.5, 2.0, 10.0})
      for (double t : {0.0, 0.3, 1.0}) {
        double sum = abk::bessel_i(0.0, z).value;
        int small = 0;
        for (int k = 1; k < 400 && small < 3; ++k) {
          const double ik = abk::bessel_i(k, z).value;
          const double term = (std::exp(k * t) + std::exp(-k * t)) * ik;
          sum += term;
          small = term < 1e-17 * sum ? small + 1 : 0;
        }
        worst = std::max(worst, std::abs(sum - std::exp(z * std::cosh(t))) / std::exp(z * std::cosh(t)));
      }
    s.upper("generating identity sum_k e^{kt} I_|k|(z) = e^{z cosh t}", "Bessel generating function", worst, 0.0,
            1e-10);
  });
  s.guard("monotonicity I_mu(z) <= I_nu(z) for mu >= nu", "order monotonicity of I", [&] {
    std::mt19937_64 rng(s.opt.seed);
    std::uniform_real_distribution<double> zd(0.01, 60.0), nd(0.0, 30.0), gd(0.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double z = zd(rng), nu = nd(rng), mu = nu + gd(rng);
      const double a = abk::bessel_i_scaled(mu, z).value, b = abk::bessel_i_scaled(nu, z).value;
      if (b > 0.0) worst = std::max(worst, a / b);
    }
    s.upper("monotonicity I_mu(z) <= I_nu(z) for mu >= nu", "order monotonicity of I", worst, 1.0, 1e-12);
  });
  s.guard("series and integral routes for e^{-x} I_nu(x) agree", "Bessel evaluation cross-check", [&] {
    double worst = 0.0;
    for (double nu : {0.0, 0.5, 3.7, 10.0})
      for (double x : {20.0, 30.0, 40.0}) {
        const double a = abk::bessel_i_scaled_series(nu, x).value, b = abk::bessel_i_scaled_integral(nu, x).value;
        worst = std::max(worst, std::abs(a - b) / b);
      }
    s.upper("series and integral routes for e^{-x} I_nu(x) agree", "Bessel evaluation cross-check", worst, 0.0,
            1e-12);
  });
  s.guard("gamma at integers and duplication formula", "Gamma function", [&] {
    double worst = 0.0, fact = 1.0;
    for (int n = 1; n <= 20; ++n) {
      worst = std::max(worst, std::abs(abk::gamma_fn(n) - fact) / fact);
      fact *= n;
    }
    for (double x : {0.3, 1.7, 4.2, 20.5}) {
      const double lhs = abk::gamma_fn(x) * abk::gamma_fn(x + 0.5);
      const double rhs = std::pow(2.0, 1.0 - 2.0 * x) * std::sqrt(M_PI) * abk::gamma_fn(2.0 * x);
      worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    s.upper("gamma at integers and duplication formula", "Gamma function", worst, 0.0, 1e-13);
  });
  s.guard("Laguerre orthogonality with weight x^a e^{-x}", "Laguerre orthogonality", [&] {
    double worst = 0.0;
    for (double a : {0.1, 0.5, 0.9}) {
      const auto& rule = abk::gauss_laguerre(24, a);
      std::vector<double> h(11);
      for (int n = 0; n <= 10; ++n) h[n] = abk::gamma_fn(n + a + 1.0) / abk::gamma_fn(n + 1.0);
      for (int m = 0; m <= 10; ++m)
        for (int n = 0; n <= 10; ++n) {
          double q = 0.0;
          for (size_t i = 0; i < rule.x.size(); ++i)
            q += rule.w[i] * abk::laguerre(a, m, rule.x[i]) * abk::laguerre(a, n, rule.x[i]);
          worst = std::max(worst, std::abs(q - (m == n ? h[n] : 0.0)) / std::sqrt(h[m] * h[n]));
        }
    }
    s.upper("Laguerre orthogonality with weight x^a e^{-x}", "Laguerre orthogonality", worst, 0.0, 1e-10);
  });
  s.guard("Laguerre recurrence vs explicit alternating sum", "Laguerre polynomials", [&] {
    std::mt19937_64 rng(s.opt.seed + 1);
    std::uniform_real_distribution<double> ad(0.0, 5.0), xd(0.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double a = ad(rng), x = xd(rng);
      const unsigned n = static_cast<unsigned>(i % 11);
      double sum = 0.0, scale = 0.0, xi = 1.0, ifact = 1.0;
      for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) xi *= x, ifact *= k;
        const double term = (k % 2 ? -1.0 : 1.0) * abk::binom_shift(a + k, n - k) * xi / ifact;
        sum += term;
        scale += std::abs(term);
      }
      worst = std::max(worst, std::abs(abk::laguerre(a, n, x) - sum) / scale);
    }
    s.upper("Laguerre recurrence vs explicit alternating sum", "Laguerre polynomials", worst, 0.0, 1e-12);
  });
  s.guard("pkm_poly equals the binomial-rescaled Laguerre polynomial", "radial polynomial P_{k,m}", [&] {
    std::mt19937_64 rng(s.opt.seed + 2);
    std::uniform_real_distribution<double> ad(0.0, 6.0), rd(0.0, 20.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double a = ad(rng), r = rd(rng);
      const unsigned m = static_cast<unsigned>(i % 11);
      const double ref = abk::laguerre(a, m, r) / abk::binom_shift(a, m);
      worst = std::max(worst, std::abs(abk::pkm_poly(a, m, r) - ref) / std::max(1.0, std::abs(ref)));
    }
    s.upper("pkm_poly equals the binomial-rescaled Laguerre polynomial", "radial polynomial P_{k,m}", worst, 0.0,
            1e-11);
  });
  s.guard("three-term recurrence residual", "Laguerre polynomials", [&] {
    double worst = 0.0;
    for (double a : {0.1, 0.5, 0.9, 3.5})
      for (double x : {0.05, 1.0, 7.0, 30.0, 50.0})
        for (unsigned n = 1; n < 30; ++n) {
          const double lm = abk::laguerre(a, n - 1, x), l0 = abk::laguerre(a, n, x), lp = abk::laguerre(a, n + 1, x);
          const double t1 = (n + 1.0) * lp, t2 = (2.0 * n + 1.0 + a - x) * l0, t3 = (n + a) * lm;
          const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
          if (scale > 0.0) worst = std::max(worst, std::abs(t1 - t2 + t3) / scale);
        }
    s.upper("three-term recurrence residual", "Laguerre polynomials", worst, 0.0, 1e-12);
  });
}

void spectrum_suite(Suite& s) {
  const char* anchor = "eigenvalues (2m+1+|k+alpha|)B0 + (k+alpha)B0";
  s.guard("spectrum bottom B0 attained exactly at k <= -1, m = 0", anchor, [&] {
    int violations = 0;
    for (double a : {0.1, 0.5, 0.9})
      for (double b0 : {0.5, 2.0}) {
        const FieldConfig cfg(a, b0);
        for (int k = -6; k <= 6; ++k)
          for (int m = 0; m <= 6; ++m) {
            const double lam = abk::eigenvalue(cfg, {k, m});
            const bool at_bottom = std::abs(lam - b0) <= 1e-14 * b0;
            if (lam < b0 * (1.0 - 1e-14) || at_bottom != (k <= -1 && m == 0)) ++violations;
          }
      }
    s.upper("spectrum bottom B0 attained exactly at k <= -1, m = 0", anchor, violations, 0.0, 0.0);
  });
  s.guard("Gram matrix of normalized eigenfunctions is the identity", "orthonormal eigenbasis", [&] {
    const FieldConfig cfg(0.5, 1.0);
    const auto w = window(-4, 4, 4);
    const auto G = abk::gram_matrix(cfg, w);
    const size_t n = w.size();
    double worst = 0.0;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) worst = std::max(worst, std::abs(G[a * n + b] - cplx(a == b ? 1.0 : 0.0)));
    s.upper("Gram matrix of normalized eigenfunctions is the identity", "orthonormal eigenbasis", worst, 0.0, 1e-8);
  });
  s.guard("finite-difference eigen-residual at h = 1e-3", anchor, [&] {
    const FieldConfig cfg(0.5, 1.0);
    double worst = 0.0, worst_order = 0.0;
    for (ModeIndex mi : {ModeIndex{0, 1}, ModeIndex{1, 2}, ModeIndex{-2, 1}}) {
      worst = std::max(worst, abk::fd_eigen_residual(cfg, mi, 1e-3));
      const double e1 = abk::fd_eigen_residual(cfg, mi, 0.02), e2 = abk::fd_eigen_residual(cfg, mi, 0.01);
      worst_order = std::max(worst_order, std::abs(std::log2(e1 / e2) - 2.0));
    }
    s.upper("finite-difference eigen-residual at h = 1e-3", anchor, worst, 1e-4, 0.0);
    s.upper("finite-difference residual order deviation from 2", anchor, worst_order, 0.0, 0.2);
  });
  for (auto [cx, K, M] : std::vector<std::tuple<double, int, int>>{{4.0, 32, 28}, {1.0, 14, 28}}) {
    const std::string name = cx > 2.0 ? "Parseval for a Gaussian away from the solenoid"
                                       : "Parseval for a Gaussian overlapping the solenoid";
    s.guard(name, "orthonormal eigenbasis", [&] {
      const FieldConfig cfg(0.5, 1.0);
      const auto st = abk::expand(cfg, [cx = cx](PolarPoint p) {
        const double dx = p.x() - cx, dy = p.y();
        return cplx(std::exp(-(dx * dx + dy * dy)), 0.0);
      }, window(-K, K, M));
      const double exact = std::sqrt(M_PI / 2.0);
      s.upper(name, "orthonormal eigenbasis", std::abs(st.l2_norm() - exact) / exact, 0.0, 1e-6,
              "center (" + std::to_string(cx) + ", 0), |k| <= " + std::to_string(K) + ", m <= " + std::to_string(M));
    });
  }
  s.guard("multipliers compose on coefficients", "functional calculus", [&] {
    const FieldConfig cfg(0.3, 1.5);
    std::mt19937_64 rng(s.opt.seed);
    const auto f = random_state(cfg, window(-6, 6, 8), rng);
    auto F = [](double lam) { return cplx(std::exp(-0.3 * lam), 0.0); };
    auto G = [](double lam) { return std::polar(1.0, std::sqrt(lam)); };
    const auto a = abk::apply_multiplier(abk::apply_multiplier(f, G), F);
    const auto b = abk::apply_multiplier(f, [&](double lam) { return F(lam) * G(lam); });
    s.upper("multipliers compose on coefficients", "functional calculus", diff_norm(a, b) / f.l2_norm(), 0.0,
            1e-15);
  });
}

void kernels_suite(Suite& s) {
  const char* anchor = "heat kernel: spectral series and closed form";
  s.guard("series and closed form agree", anchor, [&] {
    double worst = 0.0;
    for (double alpha : {0.1, 0.5, 0.9})
      for (double b0 : {0.5, 2.0})
        for (double t : {0.05, 0.2, 1.0})
          for (double r1 : {0.2, 1.0, 2.5})
            for (double r2 : {0.2, 1.0, 2.5})
              for (double dth : {0.0, 1.0, M_PI, 5.0}) {
                const FieldConfig cfg(alpha, b0);
                const PolarPoint x(r1, dth), y(r2, 0.0);
                worst = std::max(worst, rel(abk::heat_kernel_closed(cfg, t, x, y).value,
                                            abk::heat_kernel_series(cfg, t, x, y).value));
              }
    s.upper("series and closed form agree", anchor, worst, 0.0, 1e-6);
  });
  s.guard("zero-flux closed form equals the Mehler kernel", "Mehler kernel", [&] {
    double worst = 0.0;
    for (double b0 : {0.5, 1.0, 2.0})
      for (double t : {0.1, 0.7, 3.0})
        for (double th : {0.0, 1.1, 2.9, M_PI, 4.0}) {
          const PolarPoint x(1.2, th), y(0.8, 0.4);
          worst = std::max(worst, rel(abk::heat_kernel_closed_alpha(0.0, b0, t, x, y).value,
                                      abk::mehler_kernel(b0, t, x, y).value));
        }
    s.upper("zero-flux closed form equals the Mehler kernel", "Mehler kernel", worst, 0.0, 1e-12);
  });
  s.guard("Hermitian symmetry K(x,y) = conj K(y,x)", "self-adjointness of the heat semigroup", [&] {
    double worst = 0.0;
    for (double alpha : {0.3, 0.7})
      for (double t : {0.1, 1.0}) {
        const FieldConfig cfg(alpha, 1.0);
        for (auto [x, y] : std::vector<std::pair<PolarPoint, PolarPoint>>{
                 {{1.0, 0.2}, {0.5, 2.0}}, {{0.3, 3.0}, {1.4, -1.0}}, {{2.0, 1.0}, {2.0, 4.1}}}) {
          const auto a = abk::heat_kernel(cfg, t, x, y).value, b = abk::heat_kernel(cfg, t, y, x).value;
          worst = std::max(worst, rel(a, std::conj(b)));
        }
      }
    s.upper("Hermitian symmetry K(x,y) = conj K(y,x)", "self-adjointness of the heat semigroup", worst, 0.0, 1e-10);
  });
  s.guard("on-diagonal kernel is real and positive", "positivity of the heat kernel", [&] {
    double worst_im = 0.0, min_re = INFINITY;
    for (double alpha : {0.3, 0.7})
      for (double t : {0.05, 0.5, 2.0})
        for (PolarPoint x : {PolarPoint(0.2, 0.0), PolarPoint(1.0, 1.0), PolarPoint(2.5, 3.0)}) {
          const auto k = abk::heat_kernel(FieldConfig(alpha, 1.0), t, x, x).value;
          worst_im = std::max(worst_im, std::abs(k.imag()) / std::abs(k));
          min_re = std::min(min_re, k.real());
        }
    s.upper("on-diagonal kernel imaginary part", "positivity of the heat kernel", worst_im, 0.0, 1e-12);
    s.lower("on-diagonal kernel real part", "positivity of the heat kernel", min_re, 0.0, 0.0);
  });
  for (abk::Envelope e : {abk::Envelope::sharp, abk::Envelope::flat}) {
    const std::string name = std::string("Gaussian bound constant stable under 2x refinement (") +
                             abk::envelope_name(e) + " envelope)";
    s.guard(name, "Gaussian upper bounds for the heat kernel", [&] {
      const FieldConfig cfg(0.5, 1.0);
      abk::BoundSweep sw;
      sw.refine = s.opt.grid_refine;
      const auto a = abk::fit_bound_constant(cfg, e, sw);
      sw.refine = 2 * s.opt.grid_refine;
      const auto b = abk::fit_bound_constant(cfg, e, sw);
      const double change = std::abs(b.constant - a.constant) / a.constant;
      s.upper(name, "Gaussian upper bounds for the heat kernel", std::isfinite(change) ? change : INFINITY, 0.0, 0.05,
              "C = " + std::to_string(a.constant) + " -> " + std::to_string(b.constant));
    });
  }
  s.guard("L2 contraction with gap e^{-t B0}", "spectrum bottom B0", [&] {
    std::mt19937_64 rng(s.opt.seed);
    double worst = 0.0;
    for (double b0 : {0.5, 2.0}) {
      const FieldConfig cfg(0.4, b0);
      for (int i = 0; i < 5; ++i) {
        const auto f = random_state(cfg, window(-5, 5, 6), rng);
        for (double t : {0.1, 1.0, 5.0}) {
          const auto g = abk::apply_multiplier(f, [t](double lam) { return cplx(std::exp(-t * lam), 0.0); });
          worst = std::max(worst, g.l2_norm() / (std::exp(-t * b0) * f.l2_norm()));
        }
      }
    }
    s.upper("L2 contraction with gap e^{-t B0}", "spectrum bottom B0", worst, 1.0, 1e-14);
  });
  s.guard("Chapman-Kolmogorov residual", "semigroup property", [&] {
    const double r = abk::semigroup_residual(FieldConfig(0.5, 1.0), 0.2, 0.3, {1.0, 0.0}, {0.8, 1.0});
    s.upper("Chapman-Kolmogorov residual", "semigroup property", r, 0.0, 1e-5);
  });
  s.guard("Bessel integral identity", "integral identity for e^{z cos} Bessel expansion", [&] {
    double worst = 0.0, jump = 0.0;
    for (cplx z : {cplx(0.0, 0.0), cplx(0.5, 0.5), cplx(0.0, 1.8)})
      for (double x : {0.5, 2.0, 10.0}) {
        const auto rec = abk::bessel_integral_identity_check(z, x);
        worst = std::max(worst, rec.abs_diff() / std::max(1.0, std::abs(rec.rhs)));
      }
    for (double a : {0.0, 0.5})
      for (double x : {0.5, 2.0}) jump = std::max(jump, std::abs(abk::bessel_identity_jump(a, x).extrapolated));
    s.upper("Bessel integral identity", "integral identity for e^{z cos} Bessel expansion", worst, 0.0, 1e-8);
    s.upper("Bessel identity jump-line continuity", "integral identity for e^{z cos} Bessel expansion", jump, 0.0,
            1e-4);
  });
}

void propagators_suite(Suite& s) {
  const FieldConfig cfg(0.5, 1.0);
  std::mt19937_64 rng(s.opt.seed);
  const auto f = random_state(cfg, window(-8, 8, 16), rng);
  const auto u1 = random_state(cfg, window(-8, 8, 16), rng);
  const double n0 = f.l2_norm();
  s.guard("unitarity of Schrodinger and half-wave propagators", "unitary groups", [&] {
    double worst = 0.0;
    for (double t : {0.3, 1.0, 7.5, 123.0}) {
      worst = std::max(worst, std::abs(abk::schrodinger_evolve(f, t).l2_norm() - n0) / n0);
      worst = std::max(worst, std::abs(abk::halfwave_evolve(f, t).l2_norm() - n0) / n0);
    }
    s.upper("unitarity of Schrodinger and half-wave propagators", "unitary groups", worst, 0.0, 1e-14);
  });
  s.guard("half-wave group law", "unitary groups", [&] {
    double worst = 0.0;
    for (auto [t, u] : std::vector<std::pair<double, double>>{{0.3, 0.4}, {2.0, -1.5}, {10.0, 3.25}}) {
      const auto a = abk::halfwave_evolve(abk::halfwave_evolve(f, u), t);
      worst = std::max(worst, diff_norm(a, abk::halfwave_evolve(f, t + u)) / n0);
    }
    s.upper("half-wave group law", "unitary groups", worst, 0.0, 1e-13);
  });
  s.guard("wave energy conservation", "wave energy", [&] {
    const double e0 = abk::wave_energy(f, u1, 0.0);
    double worst = 0.0;
    for (double t : {0.3, 1.0, 7.5, 123.0}) worst = std::max(worst, std::abs(abk::wave_energy(f, u1, t) - e0) / e0);
    s.upper("wave energy conservation", "wave energy", worst, 0.0, 1e-12);
  });
  s.guard("wave initial data", "wave equation initial-value problem", [&] {
    const double h = 1e-6;
    const auto a0 = abk::wave_solution(f, u1, 0.0);
    const auto ap = abk::wave_solution(f, u1, h), am = abk::wave_solution(f, u1, -h);
    StateCoeffs d = ap;
    for (size_t i = 0; i < d.data().size(); ++i) d[i] = (ap[i] - am[i]) / (2.0 * h);
    s.upper("wave solution at t = 0 equals u0", "wave equation initial-value problem", diff_norm(a0, f) / n0, 0.0,
            0.0);
    s.upper("central difference of wave solution at t = 0 equals u1", "wave equation initial-value problem",
            diff_norm(d, u1) / u1.l2_norm(), 0.0, 1e-6);
  });
  s.guard("heat subordination identity", "subordination formula for e^{-y sqrt x}", [&] {
    double worst = 0.0;
    for (double x : {0.5, 2.0, 10.0})
      for (double y : {0.2, 1.0, 3.0}) {
        const auto r = abk::subordination_heat_check(x, y);
        worst = std::max(worst, r.abs_diff() / std::abs(r.lhs));
      }
    s.upper("heat subordination identity", "subordination formula for e^{-y sqrt x}", worst, 0.0, 1e-10);
  });
  s.guard("half-wave subordination identity after eps extrapolation",
          "regularized subordination formula for e^{it sqrt x}", [&] {
            double worst = 0.0;
            for (double x : {0.5, 1.0, 4.0, 25.0})
              for (double t : {0.5, 1.0, 4.0}) worst = std::max(worst, abk::subordination_halfwave_check(x, t).abs_diff());
            s.upper("half-wave subordination identity after eps extrapolation",
                    "regularized subordination formula for e^{it sqrt x}", worst, 0.0, 1e-4);
          });
  s.guard("three bumps reproduce a band-limited state", "Littlewood-Paley partition of unity", [&] {
    const int j = 2;
    const double lo = std::pow(2.0, j - 0.5), hi = std::pow(2.0, j + 0.5);
    StateCoeffs g(cfg, window(-12, 12, 12));
    std::normal_distribution<double> n(0.0, 1.0);
    for (size_t i = 0; i < g.modes().size(); ++i) {
      const double w = std::sqrt(abk::eigenvalue(cfg, g.modes().at(i)));
      if (w >= lo && w <= hi) g[i] = cplx(n(rng), n(rng));
    }
    StateCoeffs sum(cfg, g.modes());
    for (int i = j - 1; i <= j + 1; ++i) {
      const auto p = abk::frequency_localize(g, abk::LPBump{i});
      for (size_t q = 0; q < sum.data().size(); ++q) sum[q] += p[q];
    }
    s.upper("three bumps reproduce a band-limited state", "Littlewood-Paley partition of unity",
            diff_norm(sum, g) / g.l2_norm(), 0.0, 1e-14);
  });
}

void analysis_suite(Suite& s) {
  const FieldConfig cfg(0.5, 1.0);
  abk::LpGrid lp;
  lp.refine = s.opt.grid_refine;
  s.guard("Besov/Sobolev norm equivalence", "Besov and Sobolev norm equivalence", [&] {
    std::mt19937_64 rng(s.opt.seed);
    const auto states = sparse_states(cfg, 20, rng);
    for (double sv : {0.0, 0.5, 1.0}) {
      double mn = INFINITY, mx = 0.0;
      for (const auto& st : states) {
        const double r = abk::besov_norm(st, sv, 2.0, 2.0) / abk::sobolev_norm(st, sv);
        mn = std::min(mn, r);
        mx = std::max(mx, r);
      }
      char tag[64];
      std::snprintf(tag, sizeof tag, " (s = %.1f)", sv);
      s.lower(std::string("Besov/Sobolev ratio >= 0.5") + tag, "Besov and Sobolev norm equivalence", mn, 0.5, 0.0);
      s.upper(std::string("Besov/Sobolev ratio <= 2") + tag, "Besov and Sobolev norm equivalence", mx, 2.0, 0.0);
      s.lower(std::string("Besov/Sobolev ratio >= 1/sqrt2") + tag, "Besov and Sobolev norm equivalence", mn,
              1.0 / std::sqrt(2.0), 1e-12);
      s.upper(std::string("Besov/Sobolev ratio <= 1") + tag, "Besov and Sobolev norm equivalence", mx, 1.0, 1e-12);
    }
  });
  s.guard("p = 2 square-function ratio", "square-function estimate", [&] {
    std::mt19937_64 rng(s.opt.seed + 1);
    double mn = INFINITY, mx = 0.0;
    for (const auto& st : sparse_states(cfg, 20, rng)) {
      const double c = abk::square_function_ratio_coeff(st);
      mn = std::min(mn, c);
      mx = std::max(mx, c);
    }
    s.lower("p = 2 square-function ratio >= 1/sqrt2", "square-function estimate", mn, 1.0 / std::sqrt(2.0), 1e-12);
    s.upper("p = 2 square-function ratio <= 1", "square-function estimate", mx, 1.0, 1e-12);
  });
  s.guard("Bernstein ratio scale invariance", "Bernstein inequality", [&] {
    const PolarPoint y0(1.0, 0.0);
    std::vector<double> r;
    for (int j = 0; j <= 3; ++j) r.push_back(abk::bernstein_ratio(abk::localized_kernel_row(cfg, j, y0), j, abk::kInf,
                                                                  2.0, lp));
    double worst = 0.0;
    for (size_t i = 1; i < r.size(); ++i) worst = std::max(worst, std::abs(r[i] / r[i - 1] - 1.0));
    s.upper("Bernstein ratio scale invariance", "Bernstein inequality", worst, 0.0, 0.3);
  });
  s.guard("decay exponent over the regime window", "microlocalized half-wave decay 2^{2j}(1+2^j t)^{-1/2}", [&] {
    const int j = 4;
    const PolarPoint y0(1.0, 0.0);
    std::vector<double> times;
    for (int i = 0; i < 16; ++i) times.push_back(std::exp(std::log(1.0 / 16.0) + i * std::log(64.0) / 15.0));
    const auto fit = abk::decay_fit(cfg, j, y0, times);
    s.upper("decay exponent over the regime window", "microlocalized half-wave decay 2^{2j}(1+2^j t)^{-1/2}",
            fit.fitted_exponent, -0.4, 0.0, "r^2 = " + std::to_string(fit.r_squared));
    const std::vector<double> short_t = {0.0, 1.0 / 256, 1.0 / 128, 1.0 / 64, 1.0 / 32, 1.0 / 16};
    const auto sn = abk::decay_profile(cfg, j, y0, short_t);
    double spread = 0.0;
    for (double v : sn) spread = std::max(spread, std::max(v / sn[0], sn[0] / v));
    s.upper("short-time boundedness for 2^j t <= 1", "microlocalized half-wave decay 2^{2j}(1+2^j t)^{-1/2}", spread,
            4.0, 0.0);
  });
  s.guard("Strichartz ratio stable under 2x refinement", "Strichartz estimates for the wave equation", [&] {
    const auto w = window(-6, 6, 12);
    const auto u0 = abk::expand(cfg, [](PolarPoint p) {
      const double dx = p.x() - 1.0, dy = p.y();
      return cplx(std::exp(-(dx * dx + dy * dy)), 0.0);
    }, w);
    const StateCoeffs u1(cfg, w);
    double worst = 0.0;
    for (auto [q, p] : std::vector<std::pair<double, double>>{{8, 4}, {6, 6}}) {
      abk::StrichartzGrid g1, g2;
      g1.space.refine = s.opt.grid_refine;
      g2.time_intervals = 2 * g1.time_intervals;
      g2.space.refine = 2 * s.opt.grid_refine;
      const auto pair = abk::make_admissible_pair(q, p);
      const double a = abk::strichartz_norm(u0, u1, pair, 1.0, g1).ratio();
      const double b = abk::strichartz_norm(u0, u1, pair, 1.0, g2).ratio();
      worst = std::max(worst, std::isfinite(a) && std::isfinite(b) ? std::abs(b - a) / a : INFINITY);
    }
    s.upper("Strichartz ratio stable under 2x refinement", "Strichartz estimates for the wave equation", worst, 0.0,
            0.05);
    const double T = 2.0 * M_PI / cfg.b0;
    for (auto [q, p] : std::vector<std::pair<double, double>>{{8, 4}, {6, 6}}) {
      abk::StrichartzGrid g;
      g.space.refine = s.opt.grid_refine;
      const auto r = abk::strichartz_norm(u0, u1, abk::make_admissible_pair(q, p), T, g);
      std::ostringstream name;
      name << "Strichartz ratio (" << q << "," << p << ") at T = 2 pi / B0";
      s.record(name.str(), "Strichartz estimates beyond the Larmor time", r.ratio(), "recorded, not asserted");
    }
  });
  s.guard("admissibility validator matches the definition", "wave-admissible pairs", [&] {
    int mismatches = 0, accepted_bad = 0;
    for (double q : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 8.0, 12.0, 40.0, abk::kInf})
      for (double p : {1.0, 2.0, 4.0, 6.0, abk::kInf}) {
        const bool range = q >= 2.0 && p >= 2.0 && std::isfinite(p);
        const bool gap = range && (std::isinf(q) || 4.0 * p <= q * p - 2.0 * q);
        const bool got = abk::admissibility(q, p).admissible();
        if (got != (range && gap)) ++mismatches;
        if (got) {
          const auto pair = abk::make_admissible_pair(q, p);
          if (!(2.0 / pair.q <= 0.5 - 1.0 / pair.p)) ++accepted_bad;
        }
      }
    s.upper("admissibility validator matches the definition", "wave-admissible pairs", mismatches, 0.0, 0.0);
    s.upper("accepted pairs satisfy both inequalities", "wave-admissible pairs", accepted_bad, 0.0, 0.0);
  });
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"specfun", "spectrum", "kernels", "propagators", "analysis"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, const SuiteOptions& opt) {
  Suite s{name, opt, {}};
  if (name == "specfun") specfun_suite(s);
  else if (name == "spectrum") spectrum_suite(s);
  else if (name == "kernels") kernels_suite(s);
  else if (name == "propagators") propagators_suite(s);
  else if (name == "analysis") analysis_suite(s);
  else throw abk::DomainError("unknown suite " + name);
  return s.out;
}

} // namespace abkcli
