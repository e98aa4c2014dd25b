#include "abkernel/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abkernel/errors.hpp"
#include "abkernel/specfun.hpp"

namespace abk {

namespace {

double smooth_g(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

void require_same_window(const StateCoeffs& a, const StateCoeffs& b) {
  const auto &ma = a.modes(), &mb = b.modes();
  if (ma.k_min != mb.k_min || ma.k_max != mb.k_max || ma.m_max != mb.m_max || a.config().alpha != b.config().alpha ||
      a.config().b0 != b.config().b0)
    throw DomainError("states do not share configuration and mode window");
}

} // namespace

double lp_psi(double x) {
  if (x <= 1.0) return 1.0;
  if (x >= 2.0) return 0.0;
  const double a = smooth_g(2.0 - x), b = smooth_g(x - 1.0);
  return a / (a + b);
}

double lp_profile(double x) {
  if (x <= 0.5 || x >= 2.0) return 0.0;
  return lp_psi(x) - lp_psi(2.0 * x);
}

double LPBump::operator()(double lambda_sqrt) const { return lp_profile(std::ldexp(lambda_sqrt, -j)); }

StateCoeffs schrodinger_evolve(const StateCoeffs& state, double t) {
  return apply_multiplier(state, [t](double lam) { return std::polar(1.0, -t * lam); });
}

StateCoeffs halfwave_evolve(const StateCoeffs& state, double t) {
  return apply_multiplier(state, [t](double lam) { return std::polar(1.0, t * std::sqrt(lam)); });
}

StateCoeffs wave_solution(const StateCoeffs& u0, const StateCoeffs& u1, double t) {
  require_same_window(u0, u1);
  StateCoeffs out = u0;
  const auto& ms = u0.modes();
  for (size_t i = 0; i < ms.size(); ++i) {
    const double w = std::sqrt(eigenvalue(u0.config(), ms.at(i)));
    out[i] = std::cos(t * w) * u0[i] + std::sin(t * w) / w * u1[i];
  }
  return out;
}

StateCoeffs wave_velocity(const StateCoeffs& u0, const StateCoeffs& u1, double t) {
  require_same_window(u0, u1);
  StateCoeffs out = u0;
  const auto& ms = u0.modes();
  for (size_t i = 0; i < ms.size(); ++i) {
    const double w = std::sqrt(eigenvalue(u0.config(), ms.at(i)));
    out[i] = -w * std::sin(t * w) * u0[i] + std::cos(t * w) * u1[i];
  }
  return out;
}

double wave_energy(const StateCoeffs& u0, const StateCoeffs& u1, double t) {
  const auto a = wave_solution(u0, u1, t);
  const auto v = wave_velocity(u0, u1, t);
  const auto& ms = u0.modes();
  double e = 0.0;
  for (size_t i = 0; i < ms.size(); ++i) e += eigenvalue(u0.config(), ms.at(i)) * std::norm(a[i]) + std::norm(v[i]);
  return e;
}

StateCoeffs frequency_localize(const StateCoeffs& state, const LPBump& bump) {
  return apply_multiplier(state, [&](double lam) { return cplx(bump(std::sqrt(lam)), 0.0); });
}

StateCoeffs kernel_row(const FieldConfig& cfg, const ModeSet& modes, PolarPoint y0,
                       const std::function<cplx(double)>& multiplier) {
  StateCoeffs out(cfg, modes);
  if (y0.r == 0.0) return out;
  const double u0 = 0.5 * cfg.b0 * y0.r * y0.r;
  const double norm = std::sqrt(cfg.b0 / (2.0 * M_PI));
  std::vector<double> psi(modes.m_max + 1);
  for (int k = modes.k_min; k <= modes.k_max; ++k) {
    laguerre_functions(alpha_k(cfg, k), u0, modes.m_max, psi.data());
    const cplx phase = std::polar(norm, -k * y0.theta);
    for (int m = 0; m <= modes.m_max; ++m) {
      if (psi[m] == 0.0) continue;
      const cplx f = multiplier(eigenvalue(cfg, {k, m}));
      if (f == cplx(0.0, 0.0)) continue;
      out.set({k, m}, f * psi[m] * phase);
    }
  }
  return out;
}

ModeSet kernel_row_window(const FieldConfig& cfg, PolarPoint y0, double lambda_max, double rel_cut) {
  if (y0.r == 0.0) throw DomainError("kernel_row_window: y0 at the origin gives the zero row");
  const double u0 = 0.5 * cfg.b0 * y0.r * y0.r;
  const double L = lambda_max / cfg.b0;
  if (L < 1.0) throw DomainError("kernel_row_window: lambda_max below the spectrum bottom");
  const int m_cap = static_cast<int>(std::floor((L - 1.0) / 2.0));
  auto m_limit = [&](int k) {
    if (k < 0) return m_cap;
    return static_cast<int>(std::floor((L - 1.0 - 2.0 * (k + cfg.alpha)) / 2.0));
  };
  auto kmax_value = [&](int k) {
    const int mt = m_limit(k);
    if (mt < 0) return 0.0;
    const auto psi = laguerre_functions(alpha_k(cfg, k), u0, mt);
    double v = 0.0;
    for (double p : psi) v = std::max(v, std::abs(p));
    return v;
  };
  double peak = 0.0;
  int k_hi = 0, k_lo = -1;
  for (int k = 0; k <= 4096; ++k) {
    const double v = kmax_value(k);
    peak = std::max(peak, v);
    if (v >= rel_cut * peak && v > 0.0) k_hi = k;
    if (m_limit(k) < 0 || (k > 5 && v < rel_cut * peak)) break;
  }
  for (int k = -1; k >= -4096; --k) {
    const double v = kmax_value(k);
    peak = std::max(peak, v);
    if (v >= rel_cut * peak) k_lo = k;
    if (k < -5 && v < rel_cut * peak) break;
  }
  ModeSet ms;
  ms.k_min = k_lo;
  ms.k_max = k_hi;
  ms.m_max = std::max(0, m_cap);
  return ms;
}

SupNorm sup_norm(const StateCoeffs& state, const GridSpec& grid) {
  SupNorm out;
  if (state.nonzero_count() == 0) return out;
  if (grid.radial < 2 || grid.angular < 1) throw DomainError("sup_norm: grid too coarse");
  const double R = grid.r_max > 0.0 ? grid.r_max : turning_radius(state);
  std::vector<double> radii(grid.radial);
  for (int i = 0; i < grid.radial; ++i) radii[i] = R * i / (grid.radial - 1);
  const auto field = evaluate_polar(state, radii, grid.angular);
  double best = -1.0, outer = 0.0;
  size_t bi = 0, bj = 0;
  for (size_t i = 0; i < radii.size(); ++i)
    for (int j = 0; j < grid.angular; ++j) {
      const double v = std::abs(field.at(i, j));
      if (v > best) best = v, bi = i, bj = j;
      if (i + 1 == radii.size()) outer = std::max(outer, v);
    }
  if (outer > 1e-3 * best)
    throw GridTooSmallError("sup_norm: outer ring value " + std::to_string(outer) + " exceeds 1e-3 of max " +
                            std::to_string(best) + " at R = " + std::to_string(R));
  out.value = best;
  out.argmax = PolarPoint(radii[bi], 2.0 * M_PI * bj / grid.angular);

  // Newton refinement of |F|^2 in Cartesian coordinates.
  const double dr = R / (grid.radial - 1);
  const double h_grid = std::min(dr, std::max(radii[bi], dr) * 2.0 * M_PI / grid.angular);
  const double h = 0.1 * h_grid;
  auto phi = [&](double x, double y) { return std::norm(synthesize(state, PolarPoint::from_cartesian(x, y))); };
  double px = out.argmax.x(), py = out.argmax.y();
  double fbest = best * best;
  for (int it = 0; it < 8; ++it) {
    const double f0 = phi(px, py);
    const double fxp = phi(px + h, py), fxm = phi(px - h, py);
    const double fyp = phi(px, py + h), fym = phi(px, py - h);
    const double fpp = phi(px + h, py + h), fpm = phi(px + h, py - h);
    const double fmp = phi(px - h, py + h), fmm = phi(px - h, py - h);
    const double gx = (fxp - fxm) / (2 * h), gy = (fyp - fym) / (2 * h);
    const double hxx = (fxp - 2 * f0 + fxm) / (h * h), hyy = (fyp - 2 * f0 + fym) / (h * h);
    const double hxy = (fpp - fpm - fmp + fmm) / (4 * h * h);
    const double det = hxx * hyy - hxy * hxy;
    if (!(hxx < 0.0 && det > 0.0)) break;
    double sx = -(hyy * gx - hxy * gy) / det, sy = -(-hxy * gx + hxx * gy) / det;
    const double len = std::hypot(sx, sy);
    if (len > h_grid) sx *= h_grid / len, sy *= h_grid / len;
    const double fn = phi(px + sx, py + sy);
    if (!(fn > fbest)) break;
    px += sx;
    py += sy;
    fbest = fn;
    if (std::hypot(sx, sy) < 1e-9 * std::max(1.0, std::hypot(px, py))) break;
  }
  if (fbest > best * best) {
    out.value = std::sqrt(fbest);
    out.argmax = PolarPoint::from_cartesian(px, py);
  }
  return out;
}

} // namespace abk
