#pragma once

#include <vector>

#include "abkernel/spectrum.hpp"

namespace abk {

// Values of a synthesized state on a tensor polar grid, row-major in radius;
// angles are theta_j = 2 pi j / n_theta.
struct PolarField {
  std::vector<double> r;
  int n_theta = 0;
  std::vector<cplx> values;
  const cplx& at(size_t i, size_t j) const { return values[i * n_theta + j]; }
};

PolarField evaluate_polar(const StateCoeffs& state, const std::vector<double>& radii, int n_theta);

// Sup-norm sampling grid: uniform radii on [0, r_max] (r_max = 0 selects
// turning_radius) and a uniform angular grid.
struct GridSpec {
  double r_max = 0.0;
  int radial = 200;
  int angular = 256;
};

// Radius past which every nonzero mode has left its oscillatory region
// u < 4m + 2 alpha_k + 2 by a margin where it has decayed below about e^{-20}.
double turning_radius(const StateCoeffs& state);

// A grid resolving the shortest wavelength 2 pi / sqrt(lambda_max) of the
// state with the given number of points per wavelength.
GridSpec resolving_grid(const StateCoeffs& state, double r_max, double points_per_wavelength = 5.0);

// Area quadrature on the disk r <= r_max: r = r_max rho^2 with composite
// Gauss-Legendre in rho, trapezoid in theta. Integral of F ~ sum_i w[i] * dtheta * sum_j F(r_i, theta_j).
struct AreaQuadrature {
  std::vector<double> r;
  std::vector<double> w;
  int n_theta = 0;
  double dtheta() const;
};

AreaQuadrature make_area_quadrature(double r_max, int panels, int order, int n_theta);

} // namespace abk
