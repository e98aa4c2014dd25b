#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "abkernel/errors.hpp"
#include "abkernel/grid.hpp"
#include "abkernel/kernels.hpp"
#include "abkernel/parallel.hpp"
#include "abkernel/quadrature.hpp"
#include "abkernel/specfun.hpp"

namespace abk {

namespace {

double dist_sq(PolarPoint x, PolarPoint y) {
  return x.r * x.r + y.r * y.r - 2.0 * x.r * y.r * std::cos(x.theta - y.theta);
}

double log_sinh(double tau) {
  return tau > 20.0 ? tau - M_LN2 + std::log1p(-std::exp(-2.0 * tau)) : std::log(std::sinh(tau));
}

} // namespace

const char* envelope_name(Envelope e) {
  switch (e) {
    case Envelope::sharp: return "sharp";
    case Envelope::radial: return "radial";
    case Envelope::flat: return "flat";
  }
  return "?";
}

double gaussian_envelope(const FieldConfig& cfg, double t, PolarPoint x, PolarPoint y, Envelope which) {
  if (!(t > 0.0)) throw DomainError("gaussian_envelope: t must be > 0");
  const double tau = t * cfg.b0;
  switch (which) {
    case Envelope::sharp:
      return std::exp(std::log(cfg.b0 / (4.0 * M_PI)) - cfg.alpha * tau - log_sinh(tau) -
                      cfg.b0 * dist_sq(x, y) / (4.0 * std::tanh(tau)));
    case Envelope::radial: {
      const double dr = x.r - y.r;
      return std::exp(std::log(cfg.b0) + (1.0 - cfg.alpha) * tau - log_sinh(tau) -
                      cfg.b0 * dr * dr / (4.0 * std::tanh(tau)));
    }
    case Envelope::flat:
      return std::exp(-std::log(t) - dist_sq(x, y) / (4.0 * t));
  }
  return 0.0;
}

double gaussian_bound_ratio(const FieldConfig& cfg, double t, PolarPoint x, PolarPoint y, Envelope which) {
  const auto k = heat_kernel_closed(cfg, t, x, y, 1e-10);
  const double env = gaussian_envelope(cfg, t, x, y, which);
  if (env == 0.0) return std::abs(k.value) == 0.0 ? 0.0 : INFINITY;
  return std::abs(k.value) / env;
}

BoundFit fit_bound_constant(const FieldConfig& cfg, Envelope which, const BoundSweep& sweep) {
  const int refine = std::max(1, sweep.refine);
  const int nr = (sweep.n_r - 1) * refine + 1;
  const int nt = sweep.n_theta * refine;
  struct Item {
    double t, r1, r2, th;
  };
  std::vector<Item> items;
  for (double t : sweep.ts)
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nr; ++j)
        for (int q = 0; q < nt; ++q)
          items.push_back({t, sweep.r_max * i / (nr - 1), sweep.r_max * j / (nr - 1), 2.0 * M_PI * q / nt});
  std::vector<double> ratios(items.size());
  parallel_for(items.size(), [&](size_t n) {
    const auto& it = items[n];
    ratios[n] = gaussian_bound_ratio(cfg, it.t, PolarPoint(it.r1, it.th), PolarPoint(it.r2, 0.0), which);
  });
  BoundFit fit;
  fit.which = which;
  fit.points = items.size();
  size_t best = 0;
  for (size_t n = 0; n < items.size(); ++n)
    if (ratios[n] > ratios[best]) best = n;
  fit.constant = ratios[best];
  fit.t_at = items[best].t;
  fit.x_at = PolarPoint(items[best].r1, items[best].th);
  fit.y_at = PolarPoint(items[best].r2, 0.0);
  return fit;
}

bool AnnularSector::full_circle() const { return theta_max - theta_min >= 2.0 * M_PI - 1e-15; }

bool AnnularSector::contains(PolarPoint p) const {
  if (p.r < r_min || p.r > r_max) return false;
  if (full_circle()) return true;
  const double d = std::remainder(p.theta - theta_min, 2.0 * M_PI);
  const double dd = d < 0.0 ? d + 2.0 * M_PI : d;
  return dd <= theta_max - theta_min;
}

double sector_distance(const AnnularSector& a, const AnnularSector& b) {
  // Smallest angular separation between the two angular ranges.
  double gap = 0.0;
  if (!a.full_circle() && !b.full_circle()) {
    const double ca = 0.5 * (a.theta_min + a.theta_max), ha = 0.5 * (a.theta_max - a.theta_min);
    const double cb = 0.5 * (b.theta_min + b.theta_max), hb = 0.5 * (b.theta_max - b.theta_min);
    const double delta = std::abs(std::remainder(ca - cb, 2.0 * M_PI));
    gap = std::min(M_PI, std::max(0.0, delta - ha - hb));
  }
  // For fixed radii the squared distance r1^2 + r2^2 - 2 r1 r2 cos(phi) is
  // smallest at the smallest angle; the resulting quadratic in (r1, r2) is
  // convex, so its box minimum lies on an edge, where the optimum is the
  // clamped stationary point.
  const double c = std::cos(gap);
  auto q = [&](double r1, double r2) { return r1 * r1 + r2 * r2 - 2.0 * c * r1 * r2; };
  auto clamp = [](double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); };
  double best = INFINITY;
  for (double r1 : {a.r_min, a.r_max}) best = std::min(best, q(r1, clamp(c * r1, b.r_min, b.r_max)));
  for (double r2 : {b.r_min, b.r_max}) best = std::min(best, q(clamp(c * r2, a.r_min, a.r_max), r2));
  return std::sqrt(std::max(0.0, best));
}

namespace {

struct SectorNodes {
  std::vector<PolarPoint> p;
  std::vector<double> w;
};

SectorNodes sector_nodes(const AnnularSector& s, int nr, int nt) {
  SectorNodes out;
  const Rule& gr = gauss_legendre(nr);
  const Rule& gt = gauss_legendre(nt);
  const double rc = 0.5 * (s.r_min + s.r_max), rh = 0.5 * (s.r_max - s.r_min);
  for (int i = 0; i < nr; ++i) {
    const double r = rc + rh * gr.x[i];
    const double wr = rh * gr.w[i] * r;
    if (s.full_circle()) {
      for (int j = 0; j < nt; ++j) {
        out.p.emplace_back(r, s.theta_min + 2.0 * M_PI * j / nt);
        out.w.push_back(wr * 2.0 * M_PI / nt);
      }
    } else {
      const double tc = 0.5 * (s.theta_min + s.theta_max), th = 0.5 * (s.theta_max - s.theta_min);
      for (int j = 0; j < nt; ++j) {
        out.p.emplace_back(r, tc + th * gt.x[j]);
        out.w.push_back(wr * th * gt.w[j]);
      }
    }
  }
  return out;
}

} // namespace

DaviesGaffneyRecord davies_gaffney_check(const FieldConfig& cfg, double t, const AnnularSector& a,
                                         const AnnularSector& b, const PlaneFunction& f, const PlaneFunction& g,
                                         const DGQuad& quad) {
  if (!(t > 0.0)) throw DomainError("davies_gaffney_check: t must be > 0");
  DaviesGaffneyRecord rec;
  rec.distance = sector_distance(a, b);
  if (rec.distance <= 0.0) throw OverlapError("davies_gaffney_check: sectors are not separated (d(A,B) = 0)");
  const auto na = sector_nodes(a, quad.radial, quad.angular);
  const auto nb = sector_nodes(b, quad.radial, quad.angular);
  std::vector<cplx> fa(na.p.size()), gb(nb.p.size());
  double nf = 0.0, ng = 0.0;
  for (size_t i = 0; i < na.p.size(); ++i) {
    fa[i] = a.contains(na.p[i]) ? f(na.p[i]) : cplx(0.0, 0.0);
    nf += na.w[i] * std::norm(fa[i]);
  }
  for (size_t i = 0; i < nb.p.size(); ++i) {
    gb[i] = b.contains(nb.p[i]) ? g(nb.p[i]) : cplx(0.0, 0.0);
    ng += nb.w[i] * std::norm(gb[i]);
  }
  std::vector<cplx> partial(nb.p.size());
  parallel_for(nb.p.size(), [&](size_t i) {
    if (gb[i] == cplx(0.0, 0.0)) return;
    cplx acc(0.0, 0.0);
    for (size_t j = 0; j < na.p.size(); ++j) {
      if (fa[j] == cplx(0.0, 0.0)) continue;
      acc += na.w[j] * heat_kernel_closed(cfg, t, nb.p[i], na.p[j], 1e-10).value * fa[j];
    }
    partial[i] = nb.w[i] * acc * std::conj(gb[i]);
  });
  cplx total(0.0, 0.0);
  for (const auto& v : partial) total += v;
  rec.lhs = std::abs(total);
  rec.rhs = std::sqrt(nf) * std::sqrt(ng) * std::exp(-rec.distance * rec.distance / (4.0 * t));
  return rec;
}

double semigroup_residual(const FieldConfig& cfg, double t, double s, PolarPoint x, PolarPoint y,
                          const SemigroupQuad& quad) {
  if (!(t > 0.0 && s > 0.0)) throw DomainError("semigroup_residual: t and s must be > 0");
  const double width = std::sqrt(160.0 * std::max(std::tanh(t * cfg.b0), std::tanh(s * cfg.b0)) / cfg.b0);
  const double r_max = std::max(x.r, y.r) + width;
  const auto q = make_area_quadrature(r_max, quad.panels, quad.order, quad.angular);
  std::vector<cplx> rows(q.r.size());
  parallel_for(q.r.size(), [&](size_t i) {
    cplx acc(0.0, 0.0);
    for (int j = 0; j < q.n_theta; ++j) {
      const PolarPoint zp(q.r[i], q.dtheta() * j);
      acc += heat_kernel_closed(cfg, t, x, zp, quad.tol).value * heat_kernel_closed(cfg, s, zp, y, quad.tol).value;
    }
    rows[i] = q.w[i] * q.dtheta() * acc;
  });
  cplx conv(0.0, 0.0);
  for (const auto& v : rows) conv += v;
  const cplx direct = heat_kernel_closed(cfg, t + s, x, y, quad.tol).value;
  return std::abs(direct - conv) / std::abs(direct);
}

cplx bessel_identity_lhs(cplx z, double x, double quad_tol) {
  if (!(x > 0.0)) throw DomainError("bessel_identity: x must be > 0");
  const double a = std::abs(z.real());
  // Order cutoff from e^{a k} I_k(x) relative to its maximum.
  auto logterm = [&](double k) {
    const double v = bessel_i_scaled(k, x).value;
    return v > 0.0 ? a * k + std::log(v) + x : -INFINITY;
  };
  double peak = logterm(0.0);
  double K = 1.0;
  for (;; K += 1.0) {
    const double v = logterm(K);
    peak = std::max(peak, v);
    if (v < peak + std::log(quad_tol) - 20.0 && K > x) break;
    if (K > 4096.0) throw NonConvergenceError("bessel_identity_lhs: tail bound not met by order 4096");
  }
  const double rho = std::exp(a) * bessel_i_ratio_bound(K, x);
  if (!(rho < 1.0)) throw NonConvergenceError("bessel_identity_lhs: tail ratio does not contract");
  auto f = [&](double k) -> cplx { return 2.0 * std::cosh(z * k) * bessel_i(k, x).value; };
  std::vector<double> breaks;
  for (double b = 0.0; b < K; b += std::max(1.0, K / 64.0)) breaks.push_back(b);
  breaks.push_back(K);
  AdaptiveOptions opt;
  opt.rel_tol = quad_tol;
  opt.abs_tol = std::exp(peak) * std::max(quad_tol * 1e-3, 1e-15);
  return integrate_adaptive<cplx>(f, breaks, opt).value;
}

cplx bessel_identity_rhs(cplx z, double x, double quad_tol) {
  if (!(x > 0.0)) throw DomainError("bessel_identity: x must be > 0");
  if (std::abs(std::abs(z.imag()) - M_PI) == 0.0) throw DomainError("bessel_identity: Im z = pi is excluded");
  const cplx head = std::abs(z.imag()) < M_PI ? std::exp(x * std::cosh(z)) : cplx(0.0, 0.0);
  const double smax = std::acosh(1.0 + (46.0 + std::abs(std::log(quad_tol))) / x);
  std::vector<double> breaks{-smax, smax, 0.0};
  const double w = 1.0 / std::sqrt(x);
  for (double c : {1.0, 3.0})
    if (c * w < smax) {
      breaks.push_back(c * w);
      breaks.push_back(-c * w);
    }
  if (std::abs(z.real()) < smax) breaks.push_back(-z.real());
  AdaptiveOptions opt;
  opt.rel_tol = quad_tol;
  opt.abs_tol = std::exp(-x) * std::max(quad_tol * 1e-3, 1e-15);
  const cplx p1 = -z + cplx(0.0, M_PI), p2 = -z - cplx(0.0, M_PI);
  auto g = [&](cplx s) { return std::exp(-x * std::cosh(s)); };
  cplx integral;
  const double near = 0.5;
  if (std::abs(p1.imag()) >= near && std::abs(p2.imag()) >= near) {
    auto f = [&](double s) -> cplx {
      const cplx sz = cplx(s, 0.0) + z;
      return g(cplx(s, 0.0)) / (sz * sz + M_PI * M_PI);
    };
    integral = integrate_adaptive<cplx>(f, breaks, opt).value;
  } else {
    // 1/((s+z)^2 + pi^2) = (1/(s - p1) - 1/(s - p2)) / (2 pi i)
    auto piece = [&](cplx p) -> cplx {
      if (std::abs(p.imag()) < near) return integrate_with_pole(g, p, breaks, opt).value;
      auto f = [&](double s) -> cplx { return g(cplx(s, 0.0)) / (cplx(s, 0.0) - p); };
      return integrate_adaptive<cplx>(f, breaks, opt).value;
    };
    integral = (piece(p1) - piece(p2)) / cplx(0.0, 2.0 * M_PI);
  }
  return head - integral;
}

IdentityRecord bessel_integral_identity_check(cplx z, double x, double quad_tol) {
  return {bessel_identity_lhs(z, x, quad_tol), bessel_identity_rhs(z, x, quad_tol)};
}

JumpRecord bessel_identity_jump(double a, double x, const std::vector<double>& eps, double quad_tol) {
  if (eps.size() < 2) throw DomainError("bessel_identity_jump: need at least two eps values");
  JumpRecord rec;
  rec.eps = eps;
  std::vector<cplx> d;
  for (double e : eps) {
    const cplx below = bessel_identity_rhs(cplx(a, M_PI - e), x, quad_tol);
    const cplx above = bessel_identity_rhs(cplx(a, M_PI + e), x, quad_tol);
    d.push_back(below - above);
    rec.jumps.push_back(std::abs(below - above));
  }
  const size_t n = eps.size();
  const double e1 = eps[n - 2], e2 = eps[n - 1];
  const cplx ext = d[n - 1] - e2 * (d[n - 2] - d[n - 1]) / (e1 - e2);
  rec.extrapolated = std::abs(ext);
  return rec;
}

} // namespace abk
