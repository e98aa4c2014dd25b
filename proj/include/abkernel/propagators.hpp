#pragma once

#include <functional>
#include <vector>

#include "abkernel/grid.hpp"
#include "abkernel/spectrum.hpp"

namespace abk {

// Smooth dyadic bump: profile(x) = psi(x) - psi(2x), psi(x) = g(2 - x)/(g(2 - x) + g(x - 1)),
// g(u) = e^{-1/u} for u > 0. Supported in [1/2, 2]; sum_j profile(2^{-j} x) = 1.
double lp_psi(double x);
double lp_profile(double x);

struct LPBump {
  int j = 0;
  double operator()(double lambda_sqrt) const;
};

StateCoeffs schrodinger_evolve(const StateCoeffs& state, double t);
StateCoeffs halfwave_evolve(const StateCoeffs& state, double t);

// a(t) = cos(t sqrt(lambda)) a0 + sin(t sqrt(lambda)) / sqrt(lambda) a1 per mode.
StateCoeffs wave_solution(const StateCoeffs& u0, const StateCoeffs& u1, double t);
// a'(t) per mode.
StateCoeffs wave_velocity(const StateCoeffs& u0, const StateCoeffs& u1, double t);
double wave_energy(const StateCoeffs& u0, const StateCoeffs& u1, double t);

StateCoeffs frequency_localize(const StateCoeffs& state, const LPBump& bump);

// Coefficients F(lambda) conj(V~_{k,m}(y0)): the state x -> F(H)(x, y0).
StateCoeffs kernel_row(const FieldConfig& cfg, const ModeSet& modes, PolarPoint y0,
                       const std::function<cplx(double)>& multiplier);

// Smallest window containing every mode with lambda <= lambda_max whose
// normalized eigenfunction at y0 exceeds rel_cut times the largest such value.
ModeSet kernel_row_window(const FieldConfig& cfg, PolarPoint y0, double lambda_max, double rel_cut = 1e-13);

struct SupNorm {
  double value = 0.0;
  PolarPoint argmax{};
};

// Max |synthesize| on the grid, refined by Newton steps around the coarse
// argmax. Throws GridTooSmallError if the outer ring exceeds 1e-3 of the max.
SupNorm sup_norm(const StateCoeffs& state, const GridSpec& grid = {});

struct SubordinationRecord {
  cplx lhs{};
  cplx rhs{};
  double abs_diff() const { return std::abs(lhs - rhs); }
};

// e^{-y sqrt(x)} against its heat-semigroup integral (substitution s = (y / 2 sqrt x) e^u).
SubordinationRecord subordination_heat_check(double x, double y, double quad_tol = 1e-13);

// e^{-(eps - i t) sqrt(x)} from the eps-regularized oscillatory integral.
cplx subordination_halfwave_eps(double x, double t, double eps);

struct HalfwaveRecord {
  cplx lhs{};
  cplx rhs_extrapolated{};
  std::vector<double> eps;
  std::vector<cplx> values;
  std::vector<cplx> extrapolants;
  double abs_diff() const { return std::abs(lhs - rhs_extrapolated); }
};

// e^{i t sqrt(x)} against the eps -> 0 Neville extrapolation of the
// regularized integrals; throws ExtrapolationError if the extrapolants stop
// contracting.
HalfwaveRecord subordination_halfwave_check(double x, double t,
                                            const std::vector<double>& eps_seq = {0.2, 0.1, 0.05, 0.025, 0.0125,
                                                                                  0.00625},
                                            double quad_tol = 1e-12);

} // namespace abk
