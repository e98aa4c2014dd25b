#pragma once

#include <complex>
#include <compare>
#include <functional>
#include <vector>

namespace abk {

using cplx = std::complex<double>;

struct FieldConfig {
  double alpha;
  double b0;
  FieldConfig(double alpha, double b0);
};

struct ModeIndex {
  int k = 0;
  int m = 0;
  auto operator<=>(const ModeIndex&) const = default;
};

struct ModeSet {
  int k_min = -32;
  int k_max = 32;
  int m_max = 64;

  int k_count() const { return k_max - k_min + 1; }
  size_t size() const { return static_cast<size_t>(k_count()) * (m_max + 1); }
  bool contains(ModeIndex i) const { return i.k >= k_min && i.k <= k_max && i.m >= 0 && i.m <= m_max; }
  size_t index(ModeIndex i) const { return static_cast<size_t>(i.k - k_min) * (m_max + 1) + i.m; }
  ModeIndex at(size_t idx) const {
    return {k_min + static_cast<int>(idx / (m_max + 1)), static_cast<int>(idx % (m_max + 1))};
  }
};

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;
  PolarPoint() = default;
  PolarPoint(double r, double theta);
  static PolarPoint from_cartesian(double x, double y);
  double x() const;
  double y() const;
};

// Dense coefficient table over a ModeSet; entries that are exactly zero count
// as absent.
class StateCoeffs {
 public:
  StateCoeffs(FieldConfig cfg, ModeSet modes);

  const FieldConfig& config() const { return cfg_; }
  const ModeSet& modes() const { return modes_; }

  cplx at(ModeIndex i) const;
  void set(ModeIndex i, cplx v);
  cplx& operator[](size_t idx) { return c_[idx]; }
  const cplx& operator[](size_t idx) const { return c_[idx]; }
  const std::vector<cplx>& data() const { return c_; }
  std::vector<cplx>& data() { return c_; }

  // Sum |c|^2 and its square root.
  double l2_norm_sq() const;
  double l2_norm() const;
  size_t nonzero_count() const;
  // Largest eigenvalue over nonzero entries (0 for the zero state).
  double max_eigenvalue() const;

 private:
  FieldConfig cfg_;
  ModeSet modes_;
  std::vector<cplx> c_;
};

double alpha_k(const FieldConfig& cfg, int k);
double eigenvalue(const FieldConfig& cfg, ModeIndex mode);
double mode_norm_sq(const FieldConfig& cfg, ModeIndex mode);

// V_{k,m}(p), optionally L^2-normalized.
cplx eigenfunction(const FieldConfig& cfg, ModeIndex mode, PolarPoint p, bool normalized);

// Radial profile of the normalized eigenfunction: V~_{k,m}(r, theta) = R(r) e^{ik theta}.
double normalized_radial(const FieldConfig& cfg, ModeIndex mode, double r);

int multiplicity_in_window(const FieldConfig& cfg, double lambda, const ModeSet& window, double tol);

enum class RadialWeight {
  orthogonality, // u^{alpha_k} e^{-u}: exact for eigenfunction products
  smooth,        // u^{(|k| + alpha_k)/2} e^{-u}: exact-ish for Cartesian-smooth f
  automatic      // choose per k by the smaller resolution-difference estimate
};

struct QuadSpec {
  int radial_nodes = 128;
  int angular_nodes = 256;
  RadialWeight weight = RadialWeight::automatic;
  double tol = 1e-8;
};

using PlaneFunction = std::function<cplx(PolarPoint)>;

struct Expansion {
  StateCoeffs state;
  double max_error_estimate;
};

// Coefficients c_{k,m} = int f conj(V~_{k,m}); throws QuadratureError when the
// estimated error of any coefficient exceeds quad.tol.
StateCoeffs expand(const FieldConfig& cfg, const PlaneFunction& f, const ModeSet& modes, const QuadSpec& quad = {});
Expansion expand_with_error(const FieldConfig& cfg, const PlaneFunction& f, const ModeSet& modes,
                            const QuadSpec& quad = {});

cplx synthesize(const StateCoeffs& state, PolarPoint p);

StateCoeffs apply_multiplier(const StateCoeffs& state, const std::function<cplx(double)>& F);

// <V~_a, V~_b> by quadrature over a window, row-major in ModeSet order.
std::vector<cplx> gram_matrix(const FieldConfig& cfg, const ModeSet& window, const QuadSpec& quad = {});

// Relative L^2(r dr) residual of the second-order finite-difference radial
// operator applied to V_{k,m} on [r_lo, r_hi] with spacing h.
double fd_eigen_residual(const FieldConfig& cfg, ModeIndex mode, double h, double r_lo = 0.25, double r_hi = 0.0);

} // namespace abk
