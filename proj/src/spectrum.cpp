#include "abkernel/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abkernel/errors.hpp"
#include "abkernel/quadrature.hpp"
#include "abkernel/specfun.hpp"

namespace abk {

FieldConfig::FieldConfig(double alpha_, double b0_) : alpha(alpha_), b0(b0_) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1), got " + std::to_string(alpha));
  if (!(b0 > 0.0)) throw DomainError("b0 must be > 0, got " + std::to_string(b0));
}

PolarPoint::PolarPoint(double r_, double theta_) : r(r_), theta(theta_) {
  if (!(r >= 0.0)) throw DomainError("polar radius must be >= 0");
  const double two_pi = 2.0 * M_PI;
  theta = std::fmod(theta, two_pi);
  if (theta < 0.0) theta += two_pi;
  if (theta >= two_pi) theta = 0.0;
}

PolarPoint PolarPoint::from_cartesian(double x, double y) { return PolarPoint(std::hypot(x, y), std::atan2(y, x)); }

double PolarPoint::x() const { return r * std::cos(theta); }
double PolarPoint::y() const { return r * std::sin(theta); }

StateCoeffs::StateCoeffs(FieldConfig cfg, ModeSet modes) : cfg_(cfg), modes_(modes) {
  if (modes.k_min > modes.k_max || modes.m_max < 0) throw DomainError("invalid mode window");
  c_.assign(modes.size(), cplx(0.0, 0.0));
}

cplx StateCoeffs::at(ModeIndex i) const { return modes_.contains(i) ? c_[modes_.index(i)] : cplx(0.0, 0.0); }

void StateCoeffs::set(ModeIndex i, cplx v) {
  if (!modes_.contains(i))
    throw DomainError("mode (" + std::to_string(i.k) + "," + std::to_string(i.m) + ") outside window");
  c_[modes_.index(i)] = v;
}

double StateCoeffs::l2_norm_sq() const {
  double s = 0.0;
  for (const auto& v : c_) s += std::norm(v);
  return s;
}

double StateCoeffs::l2_norm() const { return std::sqrt(l2_norm_sq()); }

size_t StateCoeffs::nonzero_count() const {
  return static_cast<size_t>(std::count_if(c_.begin(), c_.end(), [](const cplx& v) { return v != cplx(0.0, 0.0); }));
}

double StateCoeffs::max_eigenvalue() const {
  double lmax = 0.0;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != cplx(0.0, 0.0)) lmax = std::max(lmax, eigenvalue(cfg_, modes_.at(i)));
  return lmax;
}

double alpha_k(const FieldConfig& cfg, int k) { return std::abs(k + cfg.alpha); }

double eigenvalue(const FieldConfig& cfg, ModeIndex mode) {
  const double ak = alpha_k(cfg, mode.k);
  return (2.0 * mode.m + 1.0 + ak) * cfg.b0 + (mode.k + cfg.alpha) * cfg.b0;
}

double mode_norm_sq(const FieldConfig& cfg, ModeIndex mode) {
  const double ak = alpha_k(cfg, mode.k);
  const double log_val = std::log(M_PI) + (ak + 1.0) * std::log(2.0 / cfg.b0) + std::lgamma(1.0 + ak) -
                         std::log(binom_shift(ak, static_cast<unsigned>(mode.m)));
  return std::exp(log_val);
}

double normalized_radial(const FieldConfig& cfg, ModeIndex mode, double r) {
  if (r == 0.0) return 0.0;
  const double u = 0.5 * cfg.b0 * r * r;
  std::vector<double> psi(mode.m + 1);
  laguerre_functions(alpha_k(cfg, mode.k), u, mode.m, psi.data());
  return std::sqrt(cfg.b0 / (2.0 * M_PI)) * psi[mode.m];
}

cplx eigenfunction(const FieldConfig& cfg, ModeIndex mode, PolarPoint p, bool normalized) {
  if (p.r == 0.0) return {0.0, 0.0};
  const cplx phase = std::polar(1.0, mode.k * p.theta);
  if (normalized) return normalized_radial(cfg, mode, p.r) * phase;
  const double ak = alpha_k(cfg, mode.k);
  const double u = 0.5 * cfg.b0 * p.r * p.r;
  const double radial =
      std::exp(ak * std::log(p.r) - 0.5 * u) * pkm_poly(ak, static_cast<unsigned>(mode.m), u);
  return radial * phase;
}

int multiplicity_in_window(const FieldConfig& cfg, double lambda, const ModeSet& window, double tol) {
  int count = 0;
  for (int k = window.k_min; k <= window.k_max; ++k)
    for (int m = 0; m <= window.m_max; ++m)
      if (std::abs(eigenvalue(cfg, {k, m}) - lambda) <= tol) ++count;
  return count;
}

namespace {

// Radial projections c_m = sqrt(2 pi / B0) int f_k(u) psi_m(u) du for one k,
// using Gauss-Laguerre with weight exponent a and n nodes.
std::vector<cplx> project_k(const FieldConfig& cfg, const PlaneFunction& f, int k, int m_max, double a, int n,
                            int n_theta) {
  const Rule& rule = gauss_laguerre(n, a);
  const double ak = alpha_k(cfg, k);
  std::vector<cplx> coeffs(m_max + 1, cplx(0.0, 0.0));
  std::vector<double> psi(m_max + 1);
  std::vector<cplx> rot(n_theta);
  for (int j = 0; j < n_theta; ++j) rot[j] = std::polar(1.0, -k * 2.0 * M_PI * j / n_theta);
  for (int i = 0; i < n; ++i) {
    const double u = rule.x[i];
    if (rule.w[i] <= 0.0) continue;
    const double log_w = std::log(rule.w[i]) + u - a * std::log(u);
    if (log_w < -700.0) continue;
    const double r = std::sqrt(2.0 * u / cfg.b0);
    cplx fk(0.0, 0.0);
    for (int j = 0; j < n_theta; ++j) fk += f(PolarPoint(r, 2.0 * M_PI * j / n_theta)) * rot[j];
    fk /= static_cast<double>(n_theta);
    if (fk == cplx(0.0, 0.0)) continue;
    laguerre_functions(ak, u, m_max, psi.data());
    const cplx wf = std::exp(log_w) * fk;
    for (int m = 0; m <= m_max; ++m) coeffs[m] += wf * psi[m];
  }
  const double pref = std::sqrt(2.0 * M_PI / cfg.b0);
  for (auto& c : coeffs) c *= pref;
  return coeffs;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

} // namespace

Expansion expand_with_error(const FieldConfig& cfg, const PlaneFunction& f, const ModeSet& modes, const QuadSpec& quad) {
  StateCoeffs out(cfg, modes);
  double worst = 0.0;
  const int n = quad.radial_nodes;
  const int n2 = std::max(8, (3 * n) / 4);
  for (int k = modes.k_min; k <= modes.k_max; ++k) {
    const double ak = alpha_k(cfg, k);
    std::vector<double> exponents;
    if (quad.weight != RadialWeight::smooth) exponents.push_back(ak);
    if (quad.weight != RadialWeight::orthogonality) exponents.push_back(0.5 * (std::abs(k) + ak));
    std::vector<cplx> best;
    double best_err = INFINITY;
    for (double a : exponents) {
      auto c1 = project_k(cfg, f, k, modes.m_max, a, n, quad.angular_nodes);
      auto c2 = project_k(cfg, f, k, modes.m_max, a, n2, quad.angular_nodes);
      const double e = max_diff(c1, c2);
      if (e < best_err) {
        best_err = e;
        best = std::move(c1);
      }
    }
    for (int m = 0; m <= modes.m_max; ++m) out.set({k, m}, best[m]);
    worst = std::max(worst, best_err);
  }
  return {std::move(out), worst};
}

StateCoeffs expand(const FieldConfig& cfg, const PlaneFunction& f, const ModeSet& modes, const QuadSpec& quad) {
  auto e = expand_with_error(cfg, f, modes, quad);
  if (e.max_error_estimate > quad.tol)
    throw QuadratureError("expand: estimated coefficient error " + std::to_string(e.max_error_estimate) +
                          " exceeds tolerance " + std::to_string(quad.tol));
  return std::move(e.state);
}

cplx synthesize(const StateCoeffs& state, PolarPoint p) {
  if (p.r == 0.0) return {0.0, 0.0};
  const auto& cfg = state.config();
  const auto& ms = state.modes();
  const double u = 0.5 * cfg.b0 * p.r * p.r;
  const double norm = std::sqrt(cfg.b0 / (2.0 * M_PI));
  std::vector<double> psi(ms.m_max + 1);
  cplx total(0.0, 0.0);
  for (int k = ms.k_min; k <= ms.k_max; ++k) {
    int top = -1;
    for (int m = ms.m_max; m >= 0; --m)
      if (state.at({k, m}) != cplx(0.0, 0.0)) {
        top = m;
        break;
      }
    if (top < 0) continue;
    laguerre_functions(alpha_k(cfg, k), u, top, psi.data());
    cplx g(0.0, 0.0);
    for (int m = 0; m <= top; ++m) g += state.at({k, m}) * psi[m];
    total += g * std::polar(1.0, k * p.theta);
  }
  return norm * total;
}

StateCoeffs apply_multiplier(const StateCoeffs& state, const std::function<cplx(double)>& F) {
  StateCoeffs out = state;
  const auto& ms = state.modes();
  for (size_t i = 0; i < ms.size(); ++i) {
    if (state[i] == cplx(0.0, 0.0)) continue;
    out[i] = F(eigenvalue(state.config(), ms.at(i))) * state[i];
  }
  return out;
}

std::vector<cplx> gram_matrix(const FieldConfig& cfg, const ModeSet& window, const QuadSpec& quad) {
  const size_t n = window.size();
  std::vector<cplx> g(n * n);
  QuadSpec q = quad;
  q.weight = RadialWeight::orthogonality;
  for (size_t b = 0; b < n; ++b) {
    const ModeIndex mb = window.at(b);
    auto fb = [&](PolarPoint p) { return eigenfunction(cfg, mb, p, true); };
    auto e = expand_with_error(cfg, fb, window, q);
    for (size_t a = 0; a < n; ++a) g[a * n + b] = e.state[a];
  }
  return g;
}

double fd_eigen_residual(const FieldConfig& cfg, ModeIndex mode, double h, double r_lo, double r_hi) {
  const double lambda = eigenvalue(cfg, mode);
  if (r_hi <= 0.0) r_hi = 2.0 * std::sqrt(2.0 * lambda / cfg.b0) + 2.0;
  const double ak = alpha_k(cfg, mode.k);
  auto R = [&](double r) {
    const double u = 0.5 * cfg.b0 * r * r;
    return std::exp(ak * std::log(r) - 0.5 * u) * pkm_poly(ak, static_cast<unsigned>(mode.m), u);
  };
  const double nu = mode.k + cfg.alpha;
  double num = 0.0, den = 0.0;
  const int n = static_cast<int>(std::floor((r_hi - r_lo) / h));
  for (int i = 1; i < n; ++i) {
    const double r = r_lo + i * h;
    const double fm = R(r - h), f0 = R(r), fp = R(r + h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double pot = (nu + 0.5 * cfg.b0 * r * r) / r;
    const double hf = -d2 - d1 / r + pot * pot * f0;
    const double e = hf - lambda * f0;
    num += e * e * r;
    den += lambda * lambda * f0 * f0 * r;
  }
  return std::sqrt(num / den);
}

} // namespace abk
