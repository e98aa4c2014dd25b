#include "abkernel/grid.hpp"

#include <algorithm>
#include <cmath>

#include "abkernel/errors.hpp"
#include "abkernel/parallel.hpp"
#include "abkernel/quadrature.hpp"
#include "abkernel/simd.hpp"

namespace abk {

PolarField evaluate_polar(const StateCoeffs& state, const std::vector<double>& radii, int n_theta) {
  if (n_theta <= 0) throw DomainError("evaluate_polar: n_theta must be positive");
  const auto& cfg = state.config();
  const auto& ms = state.modes();
  const size_t nr = radii.size();
  const int kc = ms.k_count();
  PolarField out;
  out.r = radii;
  out.n_theta = n_theta;
  out.values.assign(nr * n_theta, cplx(0.0, 0.0));
  if (nr == 0) return out;

  std::vector<double> u(nr);
  for (size_t i = 0; i < nr; ++i) u[i] = 0.5 * cfg.b0 * radii[i] * radii[i];

  // Radial sums per angular index, stored [radius][k] for the angular pass.
  std::vector<double> g_re(nr * kc, 0.0), g_im(nr * kc, 0.0);
  const auto& kern = simd::active();
  const double norm = std::sqrt(cfg.b0 / (2.0 * M_PI));
  parallel_for(static_cast<size_t>(kc), [&](size_t q) {
    const int k = ms.k_min + static_cast<int>(q);
    int top = -1;
    for (int m = ms.m_max; m >= 0; --m)
      if (state.at({k, m}) != cplx(0.0, 0.0)) {
        top = m;
        break;
      }
    if (top < 0) return;
    std::vector<double> cr(top + 1), ci(top + 1);
    for (int m = 0; m <= top; ++m) {
      const cplx c = state.at({k, m}) * norm;
      cr[m] = c.real();
      ci[m] = c.imag();
    }
    const auto tab = simd::make_laguerre_table(alpha_k(cfg, k), top);
    std::vector<double> orr(nr), oi(nr);
    kern.laguerre_sum(tab, u.data(), nr, cr.data(), ci.data(), top, orr.data(), oi.data());
    for (size_t i = 0; i < nr; ++i) {
      g_re[i * kc + q] = orr[i];
      g_im[i * kc + q] = oi[i];
    }
  });
  const double dth = 2.0 * M_PI / n_theta;
  parallel_for(nr, [&](size_t i) {
    std::vector<double> fr(n_theta), fi(n_theta);
    kern.fourier_row(&g_re[i * kc], &g_im[i * kc], ms.k_min, kc, 0.0, dth, static_cast<size_t>(n_theta), fr.data(),
                     fi.data());
    for (int j = 0; j < n_theta; ++j) out.values[i * n_theta + j] = cplx(fr[j], fi[j]);
  });
  return out;
}

double turning_radius(const StateCoeffs& state) {
  const auto& cfg = state.config();
  const auto& ms = state.modes();
  double ut = 2.0 + 2.0 * cfg.alpha;
  for (size_t i = 0; i < ms.size(); ++i) {
    if (state[i] == cplx(0.0, 0.0)) continue;
    const ModeIndex mi = ms.at(i);
    ut = std::max(ut, 4.0 * mi.m + 2.0 * alpha_k(cfg, mi.k) + 2.0);
  }
  const double umax = ut + 4.0 * std::sqrt(ut) + 40.0;
  return std::sqrt(2.0 * umax / cfg.b0);
}

GridSpec resolving_grid(const StateCoeffs& state, double r_max, double points_per_wavelength) {
  const double lmax = std::max(state.max_eigenvalue(), state.config().b0);
  const double h = 2.0 * M_PI / std::sqrt(lmax) / points_per_wavelength;
  GridSpec g;
  g.r_max = r_max;
  g.radial = std::max(16, static_cast<int>(std::ceil(r_max / h)) + 1);
  const int nt = static_cast<int>(std::ceil(2.0 * M_PI * r_max / h));
  g.angular = std::max(32, (nt + 7) / 8 * 8);
  return g;
}

double AreaQuadrature::dtheta() const { return 2.0 * M_PI / n_theta; }

AreaQuadrature make_area_quadrature(double r_max, int panels, int order, int n_theta) {
  if (!(r_max > 0.0) || panels <= 0 || order <= 0 || n_theta <= 0)
    throw DomainError("make_area_quadrature: invalid parameters");
  std::vector<double> breaks(panels + 1);
  for (int p = 0; p <= panels; ++p) breaks[p] = static_cast<double>(p) / panels;
  const Rule rho = composite_gauss_legendre(breaks, order);
  AreaQuadrature q;
  q.n_theta = n_theta;
  q.r.resize(rho.x.size());
  q.w.resize(rho.x.size());
  for (size_t i = 0; i < rho.x.size(); ++i) {
    const double s = rho.x[i];
    q.r[i] = r_max * s * s;
    // r dr = r_max s^2 * 2 r_max s ds
    q.w[i] = rho.w[i] * 2.0 * r_max * r_max * s * s * s;
  }
  return q;
}

} // namespace abk
