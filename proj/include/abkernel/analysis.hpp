#pragma once

#include <limits>
#include <string>
#include <vector>

#include "abkernel/grid.hpp"
#include "abkernel/propagators.hpp"
#include "abkernel/spectrum.hpp"

namespace abk {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponent pair with 2/q <= 1/2 - 1/p, q in [2, inf], p in [2, inf), and
// regularity s = 1 - 1/q - 2/p. Use kInf for q = inf.
struct AdmissiblePair {
  double q = 0.0;
  double p = 0.0;
  double s = 0.0;
};

struct AdmissibilityReport {
  double q = 0.0;
  double p = 0.0;
  bool range_ok = false;  // (q, p) in [2, inf] x [2, inf)
  bool gap_ok = false;    // 2/q <= 1/2 - 1/p
  double gap_lhs = 0.0;   // 2/q
  double gap_rhs = 0.0;   // 1/2 - 1/p
  bool admissible() const { return range_ok && gap_ok; }
  std::string describe() const;
};

AdmissibilityReport admissibility(double q, double p);
// Throws AdmissibilityError naming both conditions, the failing one marked.
AdmissiblePair make_admissible_pair(double q, double p);

// Spatial quadrature for L^p norms. r_max = 0 selects turning_radius(state);
// refine scales the node counts.
struct LpGrid {
  double r_max = 0.0;
  int refine = 1;
  double points_per_wavelength = 5.0;
};

AreaQuadrature lp_quadrature(const StateCoeffs& state, const LpGrid& grid);

// (sum lambda^s |c|^2)^{1/2}.
double sobolev_norm(const StateCoeffs& state, double s);

// ||f||_p by polar quadrature; p = inf uses sup_norm on a resolving grid.
double lp_norm(const StateCoeffs& state, double p, const LpGrid& grid = {});

// Dyadic scales j with profile(2^{-j} sqrt(lambda)) != 0 for some nonzero mode.
std::vector<int> active_scales(const StateCoeffs& state);

// (sum_j 2^{j s r} ||phi_j(sqrt H) f||_p^r)^{1/r}.
double besov_norm(const StateCoeffs& state, double s, double p, double r, const LpGrid& grid = {});

// ||phi_j f||_p / (2^{2j(1/q - 1/p)} ||f||_q).
double bernstein_ratio(const StateCoeffs& state, int j, double p, double q, const LpGrid& grid = {});

// ||(sum_j |phi_j f|^2)^{1/2}||_p / ||f||_p; rejects the zero state.
double square_function_ratio(const StateCoeffs& state, double p, const LpGrid& grid = {});

// The p = 2 ratio from coefficients: (sum (sum_j phi_j(sqrt lambda)^2) |c|^2 / sum |c|^2)^{1/2}.
double square_function_ratio_coeff(const StateCoeffs& state);

// Besov(2,2,s) / Sobolev(s) from coefficients.
double besov_sobolev_ratio_coeff(const StateCoeffs& state, double s);

struct DecayOptions {
  double points_per_wavelength = 5.0;
  double margin = 2.0;         // added to |y0| + t for the sampling radius, grown 1.5x on a live outer ring
  double rel_cut = 1e-13;      // kernel_row_window cutoff
};

struct DecayFit {
  int j = 0;
  std::vector<double> times;
  std::vector<double> sup_norms;
  double fitted_exponent = 0.0;
  double fitted_constant = 0.0;
  double r_squared = 0.0;
};

// True when 2^j t >= 1 and 2^{-j} t <= pi / (8 B0) admit some t.
bool decay_regime_nonempty(int j, double b0);
bool in_decay_regime(int j, double b0, double t);

// phi_j(sqrt H) applied to the kernel row at y0.
StateCoeffs localized_kernel_row(const FieldConfig& cfg, int j, PolarPoint y0, double rel_cut = 1e-13);

// sup_x |e^{i t sqrt H} phi_j(sqrt H)(x, y0)| at each t; no regime check.
std::vector<double> decay_profile(const FieldConfig& cfg, int j, PolarPoint y0, const std::vector<double>& times,
                                  const DecayOptions& opt = {});

// Least squares of log(sup / 2^{2j}) on log(1 + 2^j t). Throws
// EmptyRegimeError for an empty regime and DomainError for times outside it.
DecayFit decay_fit(const FieldConfig& cfg, int j, PolarPoint y0, const std::vector<double>& times,
                   const DecayOptions& opt = {});

DecayFit fit_decay(int j, const std::vector<double>& times, const std::vector<double>& sup_norms);

struct StrichartzGrid {
  int time_intervals = 32;     // Simpson intervals in log t (rounded up to even)
  double t_min_fraction = 1e-3;
  LpGrid space{};
};

struct StrichartzRecord {
  double q = 0.0;
  double p = 0.0;
  double s = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio() const { return lhs / rhs; }
};

// lhs = ||u||_{L^q([0,T]; L^p)}, rhs = ||u0||_{H^s} + ||u1||_{H^{s-1}} for the wave solution.
StrichartzRecord strichartz_norm(const StateCoeffs& u0, const StateCoeffs& u1, const AdmissiblePair& pair, double T,
                                 const StrichartzGrid& grid = {});
// Same computation for any q >= 1, p >= 1 with s = 1 - 1/q - 2/p and no admissibility check.
StrichartzRecord strichartz_norm_unchecked(const StateCoeffs& u0, const StateCoeffs& u1, double q, double p, double T,
                                           const StrichartzGrid& grid = {});

} // namespace abk
