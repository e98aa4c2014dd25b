#include <cmath>
#include <memory>
#include <sstream>

#include "commands.hpp"

#include "abkernel/analysis.hpp"
#include "abkernel/errors.hpp"

namespace abkcli {

namespace {

struct DecayOpts {
  int j = 4;
  double alpha = 0.5;
  double b0 = 1.0;
  double tmin = 0.0625;
  double tmax = 1.0;
  int samples = 16;
  std::string y0 = "1,0";
  double ppw = 5.0;
  double margin = 2.0;
};

constexpr const char* kAnchor = "microlocalized half-wave decay 2^{2j}(1+2^j t)^{-1/2}";
constexpr double kExpected = -0.5;
constexpr double kExponentTol = 0.1;

} // namespace

Command add_decay(CLI::App& root, const Defaults& d, const Globals&) {
  auto o = std::make_shared<DecayOpts>();
  const json sec = d.section("decay");
  check_section_keys(sec, "decay", {"j", "alpha", "b0", "tmin", "tmax", "samples", "y0", "ppw", "margin"});
  o->j = pick(sec, "j", o->j);
  o->alpha = pick(sec, "alpha", o->alpha);
  o->b0 = pick(sec, "b0", o->b0);
  o->tmin = pick(sec, "tmin", o->tmin);
  o->tmax = pick(sec, "tmax", o->tmax);
  o->samples = pick(sec, "samples", o->samples);
  o->y0 = pick(sec, "y0", o->y0);
  o->ppw = pick(sec, "ppw", o->ppw);
  o->margin = pick(sec, "margin", o->margin);

  auto* app = root.add_subcommand("decay", "Fit the decay of the frequency-localized half-wave kernel");
  app->add_option("--j", o->j, "Dyadic scale")->check(CLI::Range(0, 12))->capture_default_str();
  app->add_option("--alpha", o->alpha, "Flux; reduced modulo 1")->capture_default_str();
  app->add_option("--b0", o->b0, "Field strength B0 > 0")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--tmin", o->tmin, "First sample time")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--tmax", o->tmax, "Last sample time")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--samples", o->samples, "Log-spaced sample count")->check(CLI::Range(3, 4096))->capture_default_str();
  app->add_option("--y0", o->y0, "Kernel source point as r,theta (r > 0)")->capture_default_str();
  app->add_option("--ppw", o->ppw, "Sup-norm grid points per wavelength")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--margin", o->margin, "Sampling radius margin beyond |y0| + t")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto run = [o](Output& out) {
    out.command = "decay";
    const double alpha = normalize_alpha(o->alpha, out);
    const auto y0 = parse_point(o->y0, "--y0");
    if (y0.r == 0.0) throw UsageError("--y0: r must be > 0");
    out.config = {{"j", o->j},       {"alpha", alpha},     {"b0", o->b0},   {"tmin", o->tmin}, {"tmax", o->tmax},
                  {"samples", o->samples}, {"y0", point_json(y0)}, {"ppw", o->ppw}, {"margin", o->margin}};
    if (!abk::decay_regime_nonempty(o->j, o->b0)) {
      std::ostringstream os;
      os << "regime 2^j t >= 1 and 2^-j t <= pi/(8 B0) is empty for j = " << o->j << ", B0 = " << o->b0;
      throw abk::EmptyRegimeError(os.str());
    }
    if (!(o->tmax > o->tmin)) throw UsageError("--tmax: must exceed --tmin");
    const double lo = std::ldexp(1.0, -o->j), hi = std::ldexp(M_PI / (8.0 * o->b0), o->j);
    std::ostringstream win;
    win << "[" << lo << ", " << hi << "]";
    if (!abk::in_decay_regime(o->j, o->b0, o->tmin)) throw UsageError("--tmin: outside the regime " + win.str());
    if (!abk::in_decay_regime(o->j, o->b0, o->tmax)) throw UsageError("--tmax: outside the regime " + win.str());

    const abk::FieldConfig cfg(alpha, o->b0);
    abk::DecayOptions opt;
    opt.points_per_wavelength = o->ppw;
    opt.margin = o->margin;
    const auto times = log_spaced(o->tmin, o->tmax, o->samples);
    const auto fit = abk::decay_fit(cfg, o->j, y0, times, opt);

    const bool within = std::abs(fit.fitted_exponent - kExpected) <= kExponentTol;
    out.summary = {{"j", fit.j},
                   {"fitted_exponent", num(fit.fitted_exponent)},
                   {"fitted_constant", num(fit.fitted_constant)},
                   {"r_squared", num(fit.r_squared)},
                   {"expected_exponent", kExpected},
                   {"tolerance", kExponentTol},
                   {"within_tolerance", within},
                   {"anchor", kAnchor}};
    out.csv_header = {"t", "sup_norm", "bound_envelope"};
    for (size_t i = 0; i < times.size(); ++i) {
      const double t = times[i];
      const double env = std::ldexp(1.0, 2 * o->j) / std::sqrt(1.0 + std::ldexp(t, o->j));
      out.records.push_back({{"t", t},
                             {"sup_norm", num(fit.sup_norms[i])},
                             {"bound_envelope", env},
                             {"ratio", num(fit.sup_norms[i] / env)},
                             {"tolerance", kExponentTol},
                             {"anchor", kAnchor}});
      out.csv_rows.push_back({csv_num(t), csv_num(fit.sup_norms[i]), csv_num(env)});
    }
    return kOk;
  };
  return {app, run};
}

} // namespace abkcli
