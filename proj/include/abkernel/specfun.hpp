#pragma once

#include <vector>

namespace abk {

template <class T>
struct EvalResult {
  T value{};
  double abs_error_estimate = 0.0;
};

enum class BesselMethod { series, integral };

// Gamma function on (0, 171.6]; Lanczos approximation with reflection below 1/2.
double gamma_fn(double x);

// Rising factorial (a)_n.
double pochhammer(double a, unsigned n);

// binom(m + a, m) = (a+1)_m / m!
double binom_shift(double a, unsigned m);

// Generalized Laguerre polynomial L^order_degree(x) by upward recurrence.
double laguerre(double order, unsigned degree, double x);

// P_{k,m}(r) = binom(m + alpha_k, m)^{-1} L^{alpha_k}_m(r).
double pkm_poly(double alpha_k, unsigned degree, double r);

// Orthonormal Laguerre functions
//   psi_m(u) = u^{a/2} e^{-u/2} sqrt(m!/Gamma(m+a+1)) L^a_m(u),  m = 0..m_max,
// so that int_0^inf psi_m psi_n du = delta_mn. Rescales internally, so large u
// neither underflows the seed nor overflows the recurrence.
void laguerre_functions(double a, double u, int m_max, double* out);
std::vector<double> laguerre_functions(double a, double u, int m_max);

// Modified Bessel function of the first kind I_nu(x), nu >= 0, x >= 0.
EvalResult<double> bessel_i(double nu, double x);

// e^{-x} I_nu(x); never overflows.
EvalResult<double> bessel_i_scaled(double nu, double x);

// The two evaluation routes, exposed for cross-checks. Both return e^{-x} I_nu(x).
EvalResult<double> bessel_i_scaled_series(double nu, double x);
EvalResult<double> bessel_i_scaled_integral(double nu, double x);

// Which route bessel_i uses at (nu, x).
BesselMethod bessel_i_method(double nu, double x);

// Upper bound for I_{nu+1}(x)/I_nu(x), valid for nu >= 0, x > 0.
double bessel_i_ratio_bound(double nu, double x);

} // namespace abk
