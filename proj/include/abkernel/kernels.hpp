#pragma once

#include <functional>
#include <vector>

#include "abkernel/spectrum.hpp"

namespace abk {

enum class KernelMethod { series, closed_form, mehler };

const char* method_name(KernelMethod m);

struct KernelValue {
  cplx value{};
  KernelMethod method = KernelMethod::series;
  double abs_error_estimate = 0.0;
};

// Unit phase on the outer angular branches of the closed form.
struct PhaseFactor {
  cplx value{1.0, 0.0};
};

PhaseFactor phase_factor(double alpha, double theta1, double theta2);

// Angular-mode series of the heat kernel, summed in multiprecision with a
// rigorous tail bound; tail_tol is relative to |K|. Throws NonConvergenceError
// when the tail rule needs |k| > 4096 or more precision than the top tier.
KernelValue heat_kernel_series(const FieldConfig& cfg, double t, PolarPoint x, PolarPoint y, double tail_tol = 1e-12);

// Closed form from the angle-shift (Poisson) resummation of the series:
// P [e^{-i alpha dth} e^{z cosh(tau - i dth)}
//    - sin(alpha pi)/pi int e^{-z cosh s + alpha (s - tau)} / (e^{i dth} e^{s - tau} + 1) ds],
// P = B0 / (4 pi sinh tau) e^{-B0 (r1^2 + r2^2) coth(tau) / 4}, tau = t B0,
// z = B0 r1 r2 / (2 sinh tau), dth = theta1 - theta2 folded onto (-pi, pi].
KernelValue heat_kernel_closed(const FieldConfig& cfg, double t, PolarPoint x, PolarPoint y, double quad_tol = 1e-12);

// Same construction for alpha in [0, 1); alpha = 0 drops the correction.
KernelValue heat_kernel_closed_alpha(double alpha, double b0, double t, PolarPoint x, PolarPoint y,
                                     double quad_tol = 1e-12);

// Heat kernel of the alpha = 0 operator:
// B0 / (4 pi sinh tau) exp(-B0 |x - y|^2 / (4 tanh tau) + i B0 (x1 y2 - x2 y1) / 2).
KernelValue mehler_kernel(double b0, double t, PolarPoint x, PolarPoint y);

// Series unless t B0 < 1e-4, where only the closed form is used.
KernelValue heat_kernel(const FieldConfig& cfg, double t, PolarPoint x, PolarPoint y, double tol = 1e-12);

enum class Envelope { sharp, radial, flat };

const char* envelope_name(Envelope e);

// Envelope of the selected Gaussian bound with C = 1.
double gaussian_envelope(const FieldConfig& cfg, double t, PolarPoint x, PolarPoint y, Envelope which);

// |K(t; x, y)| / envelope.
double gaussian_bound_ratio(const FieldConfig& cfg, double t, PolarPoint x, PolarPoint y, Envelope which);

// Sweep of the bound ratio over t in ts, r1, r2 uniform on [0, r_max] with
// n_r points each, and n_theta angles on [0, 2 pi); refine multiplies both
// point counts.
struct BoundSweep {
  std::vector<double> ts{0.05, 0.2, 1.0};
  double r_max = 3.0;
  int n_r = 7;
  int n_theta = 8;
  int refine = 1;
};

struct BoundFit {
  Envelope which;
  double constant = 0.0;
  double t_at = 0.0;
  PolarPoint x_at{};
  PolarPoint y_at{};
  size_t points = 0;
};

BoundFit fit_bound_constant(const FieldConfig& cfg, Envelope which, const BoundSweep& sweep);

struct AnnularSector {
  double r_min = 0.0;
  double r_max = 1.0;
  double theta_min = 0.0;
  double theta_max = 2.0 * M_PI;
  bool full_circle() const;
  bool contains(PolarPoint p) const;
};

// Exact Euclidean distance between two annular sectors.
double sector_distance(const AnnularSector& a, const AnnularSector& b);

struct DaviesGaffneyRecord {
  double lhs = 0.0;
  double rhs = 0.0;
  double distance = 0.0;
  double margin() const { return rhs - lhs; }
};

struct DGQuad {
  int radial = 8;
  int angular = 12;
};

// |<e^{-tH} f, g>| by tensor Gauss-Legendre over the two sectors, with f and g
// windowed to A and B; rhs = |f|_{L2(A)} |g|_{L2(B)} exp(-d^2 / 4t).
DaviesGaffneyRecord davies_gaffney_check(const FieldConfig& cfg, double t, const AnnularSector& a,
                                         const AnnularSector& b, const PlaneFunction& f, const PlaneFunction& g,
                                         const DGQuad& quad = {});

struct SemigroupQuad {
  int panels = 12;
  int order = 16;
  int angular = 128;
  double tol = 1e-13;
};

// |K(t+s; x, y) - int K(t; x, z) K(s; z, y) dz| / |K(t+s; x, y)|.
double semigroup_residual(const FieldConfig& cfg, double t, double s, PolarPoint x, PolarPoint y,
                          const SemigroupQuad& quad = {});

struct IdentityRecord {
  cplx lhs{};
  cplx rhs{};
  double abs_diff() const { return std::abs(lhs - rhs); }
};

// int e^{z k} I_{|k|}(x) dk against e^{x cosh z} H(pi - |Im z|) - int e^{-x cosh s} / ((s+z)^2 + pi^2) ds.
IdentityRecord bessel_integral_identity_check(cplx z, double x, double quad_tol = 1e-12);

cplx bessel_identity_lhs(cplx z, double x, double quad_tol = 1e-12);
cplx bessel_identity_rhs(cplx z, double x, double quad_tol = 1e-12);

// Jump of the right-hand side across Im z = pi at Re z = a: differences at
// pi -/+ eps for each eps, and their linear extrapolation to eps = 0.
struct JumpRecord {
  std::vector<double> eps;
  std::vector<double> jumps;
  double extrapolated = 0.0;
};

JumpRecord bessel_identity_jump(double a, double x, const std::vector<double>& eps = {1e-2, 1e-3, 1e-4},
                                double quad_tol = 1e-12);

} // namespace abk
