#include <cmath>
#include <memory>

#include "commands.hpp"

#include "abkernel/analysis.hpp"

namespace abkcli {

namespace {

struct StrichartzOpts {
  std::string q = "8";
  std::string p = "4";
  double T = 1.0;
  std::string data = "gaussian";
  int j = 3;
  std::string y0 = "1,0";
  double alpha = 0.5;
  double b0 = 1.0;
  int kmax = 6;
  int mmax = 12;
  int intervals = 32;
};

constexpr const char* kAnchor = "Strichartz estimate for the wave equation on wave-admissible (q, p)";
constexpr double kRefineTol = 0.05;

} // namespace

Command add_strichartz(CLI::App& root, const Defaults& d, const Globals&) {
  auto o = std::make_shared<StrichartzOpts>();
  const json sec = d.section("strichartz");
  check_section_keys(sec, "strichartz",
                     {"q", "p", "T", "data", "j", "y0", "alpha", "b0", "kmax", "mmax", "intervals"});
  o->q = pick(sec, "q", o->q);
  o->p = pick(sec, "p", o->p);
  o->T = pick(sec, "T", o->T);
  o->data = pick(sec, "data", o->data);
  o->j = pick(sec, "j", o->j);
  o->y0 = pick(sec, "y0", o->y0);
  o->alpha = pick(sec, "alpha", o->alpha);
  o->b0 = pick(sec, "b0", o->b0);
  o->kmax = pick(sec, "kmax", o->kmax);
  o->mmax = pick(sec, "mmax", o->mmax);
  o->intervals = pick(sec, "intervals", o->intervals);

  auto* app = root.add_subcommand("strichartz", "Strichartz ratio for wave data on an admissible pair");
  app->add_option("--q", o->q, "Time exponent (number or inf)")->capture_default_str();
  app->add_option("--p", o->p, "Space exponent")->capture_default_str();
  app->add_option("--T", o->T, "Time horizon")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--data", o->data, "single-mode, gaussian or kernel-row-j")
      ->check(CLI::IsMember({"single-mode", "gaussian", "kernel-row-j"}))
      ->capture_default_str();
  app->add_option("--j", o->j, "Scale for kernel-row-j")->check(CLI::Range(0, 10))->capture_default_str();
  app->add_option("--y0", o->y0, "Source point for kernel-row-j")->capture_default_str();
  app->add_option("--alpha", o->alpha, "Flux; reduced modulo 1")->capture_default_str();
  app->add_option("--b0", o->b0, "Field strength B0 > 0")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--kmax", o->kmax, "Mode window |k| <= kmax for the presets")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  app->add_option("--mmax", o->mmax, "Mode window m <= mmax for the presets")
      ->check(CLI::Range(0, 256))
      ->capture_default_str();
  app->add_option("--intervals", o->intervals, "Simpson intervals in log t")
      ->check(CLI::Range(2, 4096))
      ->capture_default_str();

  auto run = [o](Output& out) {
    out.command = "strichartz";
    const double q = parse_exponent(o->q, "--q"), p = parse_exponent(o->p, "--p");
    const auto pair = abk::make_admissible_pair(q, p);
    const double alpha = normalize_alpha(o->alpha, out);
    const abk::FieldConfig cfg(alpha, o->b0);
    out.config = {{"q", num(q)},         {"p", num(p)},       {"T", o->T},         {"data", o->data},
                  {"alpha", alpha},      {"b0", o->b0},       {"kmax", o->kmax},   {"mmax", o->mmax},
                  {"intervals", o->intervals}};

    abk::ModeSet w;
    w.k_min = -o->kmax;
    w.k_max = o->kmax;
    w.m_max = o->mmax;
    abk::StateCoeffs u0(cfg, w);
    if (o->data == "single-mode") {
      if (!w.contains({1, 1})) throw UsageError("--kmax: single-mode data needs the mode (1, 1) in the window");
      u0.set({1, 1}, 1.0);
    } else if (o->data == "gaussian") {
      u0 = abk::expand(cfg, [](abk::PolarPoint x) {
        const double dx = x.x() - 1.0, dy = x.y();
        return abk::cplx(std::exp(-(dx * dx + dy * dy)), 0.0);
      }, w);
    } else {
      const auto y0 = parse_point(o->y0, "--y0");
      if (y0.r == 0.0) throw UsageError("--y0: r must be > 0");
      out.config["j"] = o->j;
      out.config["y0"] = point_json(y0);
      u0 = abk::localized_kernel_row(cfg, o->j, y0);
    }
    const abk::StateCoeffs u1(cfg, u0.modes());

    abk::StrichartzGrid g1, g2;
    g1.time_intervals = o->intervals;
    g2.time_intervals = 2 * o->intervals;
    g2.space.refine = 2;
    const auto a = abk::strichartz_norm(u0, u1, pair, o->T, g1);
    const auto b = abk::strichartz_norm(u0, u1, pair, o->T, g2);
    const double refinement_ratio = b.ratio() / a.ratio();
    const bool stable = std::abs(refinement_ratio - 1.0) <= kRefineTol;
    out.records.push_back({{"q", num(a.q)},
                           {"p", num(a.p)},
                           {"s", a.s},
                           {"lhs", num(b.lhs)},
                           {"rhs", num(b.rhs)},
                           {"ratio", num(b.ratio())},
                           {"coarse_ratio", num(a.ratio())},
                           {"refinement_ratio", num(refinement_ratio)},
                           {"refinement_stable", stable},
                           {"tolerance", kRefineTol},
                           {"anchor", kAnchor}});
    out.csv_header = {"q", "p", "s", "lhs", "rhs", "ratio", "refinement_ratio", "tolerance"};
    out.csv_rows.push_back({csv_num(a.q), csv_num(a.p), csv_num(a.s), csv_num(b.lhs), csv_num(b.rhs),
                            csv_num(b.ratio()), csv_num(refinement_ratio), csv_num(kRefineTol)});
    return kOk;
  };
  return {app, run};
}

} // namespace abkcli
