#include "abkernel/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "abkernel/errors.hpp"

namespace abk {

namespace {

double lambda_max_of(const StateCoeffs& state) { return std::max(state.max_eigenvalue(), state.config().b0); }

int k_abs_max(const StateCoeffs& state) {
  const auto& ms = state.modes();
  int kmax = 0;
  for (size_t i = 0; i < ms.size(); ++i)
    if (state[i] != cplx(0.0, 0.0)) kmax = std::max(kmax, std::abs(ms.at(i).k));
  return kmax;
}

double integrate_power(const AreaQuadrature& quad, const std::vector<double>& mod, double p) {
  double acc = 0.0;
  for (size_t i = 0; i < quad.r.size(); ++i) {
    double row = 0.0;
    for (int j = 0; j < quad.n_theta; ++j) {
      const double v = mod[i * quad.n_theta + j];
      if (v > 0.0) row += std::pow(v, p);
    }
    acc += quad.w[i] * row;
  }
  return acc * quad.dtheta();
}

std::vector<double> moduli(const StateCoeffs& state, const AreaQuadrature& quad) {
  const auto field = evaluate_polar(state, quad.r, quad.n_theta);
  std::vector<double> out(field.values.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = std::abs(field.values[i]);
  return out;
}

double lp_on(const StateCoeffs& state, double p, const AreaQuadrature& quad, const LpGrid& grid) {
  if (state.nonzero_count() == 0) return 0.0;
  if (std::isinf(p)) {
    const double R = grid.r_max > 0.0 ? grid.r_max : turning_radius(state);
    return sup_norm(state, resolving_grid(state, R, grid.points_per_wavelength * grid.refine)).value;
  }
  return std::pow(integrate_power(quad, moduli(state, quad), p), 1.0 / p);
}

void require_exponent(double p, const char* who) {
  if (!(p >= 1.0)) throw DomainError(std::string(who) + ": exponent must be >= 1");
}

StateCoeffs support_union(const StateCoeffs& a, const StateCoeffs& b) {
  StateCoeffs out = a;
  for (size_t i = 0; i < out.data().size(); ++i) out[i] = std::abs(a[i]) + std::abs(b[i]);
  return out;
}

} // namespace

std::string AdmissibilityReport::describe() const {
  std::ostringstream os;
  os << "(q,p) = (" << q << "," << p << "): ";
  os << (range_ok ? "[ok] " : "[FAILS] ") << "(q,p) in [2,inf] x [2,inf); ";
  os << (gap_ok ? "[ok] " : "[FAILS] ") << "2/q <= 1/2 - 1/p (" << gap_lhs << " vs " << gap_rhs << ")";
  return os.str();
}

AdmissibilityReport admissibility(double q, double p) {
  AdmissibilityReport r;
  r.q = q;
  r.p = p;
  r.range_ok = q >= 2.0 && p >= 2.0 && std::isfinite(p) && !std::isnan(q);
  r.gap_lhs = std::isinf(q) ? 0.0 : 2.0 / q;
  r.gap_rhs = 0.5 - (std::isinf(p) ? 0.0 : 1.0 / p);
  r.gap_ok = r.gap_lhs <= r.gap_rhs;
  return r;
}

AdmissiblePair make_admissible_pair(double q, double p) {
  const auto rep = admissibility(q, p);
  if (!rep.admissible()) throw AdmissibilityError("inadmissible pair " + rep.describe());
  return {q, p, 1.0 - (std::isinf(q) ? 0.0 : 1.0 / q) - 2.0 / p};
}

AreaQuadrature lp_quadrature(const StateCoeffs& state, const LpGrid& grid) {
  if (grid.refine < 1) throw DomainError("lp_quadrature: refine must be >= 1");
  const double R = grid.r_max > 0.0 ? grid.r_max : turning_radius(state);
  const double h = 2.0 * M_PI / std::sqrt(lambda_max_of(state)) / grid.points_per_wavelength;
  const int panels = std::max(4, static_cast<int>(std::ceil(2.0 * R / (10.0 * h)))) * grid.refine;
  int nt = std::max({64, 8 * k_abs_max(state) + 8, static_cast<int>(std::ceil(2.0 * M_PI * R / h))});
  nt = (nt + 7) / 8 * 8 * grid.refine;
  return make_area_quadrature(R, panels, 16, nt);
}

double sobolev_norm(const StateCoeffs& state, double s) {
  const auto& ms = state.modes();
  double acc = 0.0;
  for (size_t i = 0; i < ms.size(); ++i) {
    const double c2 = std::norm(state[i]);
    if (c2 == 0.0) continue;
    acc += std::pow(eigenvalue(state.config(), ms.at(i)), s) * c2;
  }
  return std::sqrt(acc);
}

double lp_norm(const StateCoeffs& state, double p, const LpGrid& grid) {
  require_exponent(p, "lp_norm");
  if (state.nonzero_count() == 0) return 0.0;
  if (std::isinf(p)) return lp_on(state, p, {}, grid);
  return lp_on(state, p, lp_quadrature(state, grid), grid);
}

std::vector<int> active_scales(const StateCoeffs& state) {
  std::set<int> js;
  const auto& ms = state.modes();
  for (size_t i = 0; i < ms.size(); ++i) {
    if (state[i] == cplx(0.0, 0.0)) continue;
    const double x = std::sqrt(eigenvalue(state.config(), ms.at(i)));
    const double l = std::log2(x);
    for (int j = static_cast<int>(std::floor(l)) - 1; j <= static_cast<int>(std::ceil(l)) + 1; ++j)
      if (lp_profile(std::ldexp(x, -j)) != 0.0) js.insert(j);
  }
  return {js.begin(), js.end()};
}

double besov_norm(const StateCoeffs& state, double s, double p, double r, const LpGrid& grid) {
  require_exponent(p, "besov_norm");
  if (!(r >= 1.0 && std::isfinite(r))) throw DomainError("besov_norm: r must lie in [1, inf)");
  if (state.nonzero_count() == 0) return 0.0;
  const AreaQuadrature quad = std::isinf(p) ? AreaQuadrature{} : lp_quadrature(state, grid);
  double acc = 0.0;
  for (int j : active_scales(state)) {
    const auto piece = frequency_localize(state, LPBump{j});
    acc += std::exp2(j * s * r) * std::pow(lp_on(piece, p, quad, grid), r);
  }
  return std::pow(acc, 1.0 / r);
}

double bernstein_ratio(const StateCoeffs& state, int j, double p, double q, const LpGrid& grid) {
  require_exponent(p, "bernstein_ratio");
  require_exponent(q, "bernstein_ratio");
  if (!(q <= p)) throw DomainError("bernstein_ratio: need q <= p");
  if (state.nonzero_count() == 0) throw DomainError("bernstein_ratio: zero state");
  const AreaQuadrature quad = lp_quadrature(state, grid);
  const auto piece = frequency_localize(state, LPBump{j});
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  const double num = lp_on(piece, p, quad, grid);
  const double den = std::exp2(2.0 * j * (1.0 / q - inv_p)) * lp_on(state, q, quad, grid);
  return num / den;
}

double square_function_ratio(const StateCoeffs& state, double p, const LpGrid& grid) {
  if (!(p > 1.0 && std::isfinite(p))) throw DomainError("square_function_ratio: p must lie in (1, inf)");
  if (state.nonzero_count() == 0) throw DomainError("square_function_ratio: zero state has no defined ratio");
  const AreaQuadrature quad = lp_quadrature(state, grid);
  std::vector<double> sq;
  for (int j : active_scales(state)) {
    const auto m = moduli(frequency_localize(state, LPBump{j}), quad);
    if (sq.empty()) sq.assign(m.size(), 0.0);
    for (size_t i = 0; i < m.size(); ++i) sq[i] += m[i] * m[i];
  }
  for (double& v : sq) v = std::sqrt(v);
  const double num = std::pow(integrate_power(quad, sq, p), 1.0 / p);
  return num / lp_on(state, p, quad, grid);
}

double square_function_ratio_coeff(const StateCoeffs& state) {
  if (state.nonzero_count() == 0) throw DomainError("square_function_ratio_coeff: zero state");
  const auto& ms = state.modes();
  const auto js = active_scales(state);
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < ms.size(); ++i) {
    const double c2 = std::norm(state[i]);
    if (c2 == 0.0) continue;
    const double x = std::sqrt(eigenvalue(state.config(), ms.at(i)));
    double w = 0.0;
    for (int j : js) w += std::pow(lp_profile(std::ldexp(x, -j)), 2);
    num += w * c2;
    den += c2;
  }
  return std::sqrt(num / den);
}

double besov_sobolev_ratio_coeff(const StateCoeffs& state, double s) {
  if (state.nonzero_count() == 0) throw DomainError("besov_sobolev_ratio_coeff: zero state");
  const auto& ms = state.modes();
  const auto js = active_scales(state);
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < ms.size(); ++i) {
    const double c2 = std::norm(state[i]);
    if (c2 == 0.0) continue;
    const double lam = eigenvalue(state.config(), ms.at(i));
    const double x = std::sqrt(lam);
    double w = 0.0;
    for (int j : js) w += std::exp2(2.0 * j * s) * std::pow(lp_profile(std::ldexp(x, -j)), 2);
    num += w * c2;
    den += std::pow(lam, s) * c2;
  }
  return std::sqrt(num / den);
}

bool in_decay_regime(int j, double b0, double t) {
  return std::ldexp(t, j) >= 1.0 && std::ldexp(t, -j) <= M_PI / (8.0 * b0);
}

bool decay_regime_nonempty(int j, double b0) { return in_decay_regime(j, b0, std::ldexp(1.0, -j)); }

StateCoeffs localized_kernel_row(const FieldConfig& cfg, int j, PolarPoint y0, double rel_cut) {
  const double top = std::ldexp(2.0, j);
  const ModeSet window = kernel_row_window(cfg, y0, top * top, rel_cut);
  const LPBump bump{j};
  return kernel_row(cfg, window, y0, [&](double lam) { return cplx(bump(std::sqrt(lam)), 0.0); });
}

std::vector<double> decay_profile(const FieldConfig& cfg, int j, PolarPoint y0, const std::vector<double>& times,
                                  const DecayOptions& opt) {
  const auto f = localized_kernel_row(cfg, j, y0, opt.rel_cut);
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    const auto ft = halfwave_evolve(f, t);
    double R = y0.r + std::abs(t) + opt.margin;
    for (int attempt = 0;; ++attempt) {
      try {
        out.push_back(sup_norm(ft, resolving_grid(ft, R, opt.points_per_wavelength)).value);
        break;
      } catch (const GridTooSmallError&) {
        if (attempt == 4) throw;
        R *= 1.5;
      }
    }
  }
  return out;
}

DecayFit fit_decay(int j, const std::vector<double>& times, const std::vector<double>& sup_norms) {
  if (times.size() != sup_norms.size() || times.size() < 2) throw DomainError("fit_decay: need >= 2 paired samples");
  for (size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw DomainError("fit_decay: times must be strictly increasing");
  DecayFit fit;
  fit.j = j;
  fit.times = times;
  fit.sup_norms = sup_norms;
  const size_t n = times.size();
  std::vector<double> x(n), y(n);
  for (size_t i = 0; i < n; ++i) {
    if (!(sup_norms[i] > 0.0)) throw DomainError("fit_decay: sup norms must be positive");
    x[i] = std::log1p(std::ldexp(times[i], j));
    y[i] = std::log(std::ldexp(sup_norms[i], -2 * j));
  }
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw DomainError("fit_decay: times give a degenerate design");
  fit.fitted_exponent = sxy / sxx;
  const double intercept = my - fit.fitted_exponent * mx;
  fit.fitted_constant = std::exp(intercept);
  double ssr = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double e = y[i] - (intercept + fit.fitted_exponent * x[i]);
    ssr += e * e;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
  return fit;
}

DecayFit decay_fit(const FieldConfig& cfg, int j, PolarPoint y0, const std::vector<double>& times,
                   const DecayOptions& opt) {
  if (!decay_regime_nonempty(j, cfg.b0)) {
    std::ostringstream os;
    os << "decay_fit: regime 2^j t >= 1 and 2^-j t <= pi/(8 B0) is empty for j = " << j << ", B0 = " << cfg.b0;
    throw EmptyRegimeError(os.str());
  }
  for (double t : times)
    if (!in_decay_regime(j, cfg.b0, t)) {
      std::ostringstream os;
      os << "decay_fit: t = " << t << " lies outside the regime [" << std::ldexp(1.0, -j) << ", "
         << std::ldexp(M_PI / (8.0 * cfg.b0), j) << "]";
      throw DomainError(os.str());
    }
  return fit_decay(j, times, decay_profile(cfg, j, y0, times, opt));
}

StrichartzRecord strichartz_norm_unchecked(const StateCoeffs& u0, const StateCoeffs& u1, double q, double p, double T,
                                           const StrichartzGrid& grid) {
  require_exponent(q, "strichartz_norm");
  require_exponent(p, "strichartz_norm");
  if (!(T > 0.0 && std::isfinite(T))) throw DomainError("strichartz_norm: T must be finite and > 0");
  if (!(grid.t_min_fraction > 0.0 && grid.t_min_fraction < 1.0))
    throw DomainError("strichartz_norm: t_min_fraction must lie in (0, 1)");
  StrichartzRecord rec;
  rec.q = q;
  rec.p = p;
  rec.s = 1.0 - (std::isinf(q) ? 0.0 : 1.0 / q) - (std::isinf(p) ? 0.0 : 2.0 / p);
  rec.rhs = sobolev_norm(u0, rec.s) + sobolev_norm(u1, rec.s - 1.0);

  const StateCoeffs ref = support_union(u0, u1);
  const AreaQuadrature quad = std::isinf(p) ? AreaQuadrature{} : lp_quadrature(ref, grid.space);
  LpGrid space = grid.space;
  if (space.r_max <= 0.0) space.r_max = turning_radius(ref);
  auto norm_at = [&](double t) { return lp_on(wave_solution(u0, u1, t), p, quad, space); };

  const int n = std::max(2, grid.time_intervals + (grid.time_intervals & 1));
  const double t_min = T * grid.t_min_fraction;
  const double v0 = std::log(t_min), v1 = std::log(T), dv = (v1 - v0) / n;
  std::vector<double> nodes(n + 1), vals(n + 1);
  for (int i = 0; i <= n; ++i) {
    nodes[i] = std::exp(v0 + i * dv);
    vals[i] = norm_at(nodes[i]);
  }
  const double at0 = norm_at(0.0);
  if (std::isinf(q)) {
    rec.lhs = std::max(at0, *std::max_element(vals.begin(), vals.end()));
    return rec;
  }
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * std::pow(vals[i], q) * nodes[i];
  }
  acc *= dv / 3.0;
  acc += 0.5 * t_min * (std::pow(at0, q) + std::pow(vals[0], q));
  rec.lhs = std::pow(acc, 1.0 / q);
  return rec;
}

StrichartzRecord strichartz_norm(const StateCoeffs& u0, const StateCoeffs& u1, const AdmissiblePair& pair, double T,
                                 const StrichartzGrid& grid) {
  const auto checked = make_admissible_pair(pair.q, pair.p);
  if (!(checked.s >= 0.0 && checked.s < 1.0)) throw AdmissibilityError("strichartz_norm: need 0 <= s < 1");
  return strichartz_norm_unchecked(u0, u1, pair.q, pair.p, T, grid);
}

} // namespace abk
