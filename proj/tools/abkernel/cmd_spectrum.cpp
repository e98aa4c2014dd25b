#include <algorithm>
#include <memory>

#include "commands.hpp"

namespace abkcli {

namespace {

struct SpectrumOpts {
  double alpha = 0.5;
  double b0 = 1.0;
  int kmin = -4;
  int kmax = 4;
  int mmax = 4;
  double lambda_max = 0.0;
};

constexpr const char* kAnchor = "eigenvalues (2m+1+|k+alpha|)B0 + (k+alpha)B0 and Laguerre eigenfunctions";
constexpr double kTol = 1e-12;

} // namespace

Command add_spectrum(CLI::App& root, const Defaults& d, const Globals&) {
  auto o = std::make_shared<SpectrumOpts>();
  const json sec = d.section("spectrum");
  check_section_keys(sec, "spectrum", {"alpha", "b0", "kmin", "kmax", "mmax", "lambda_max"});
  o->alpha = pick(sec, "alpha", o->alpha);
  o->b0 = pick(sec, "b0", o->b0);
  o->kmin = pick(sec, "kmin", o->kmin);
  o->kmax = pick(sec, "kmax", o->kmax);
  o->mmax = pick(sec, "mmax", o->mmax);
  o->lambda_max = pick(sec, "lambda_max", o->lambda_max);

  auto* app = root.add_subcommand("spectrum", "List eigenvalues over a mode window");
  app->add_option("--alpha", o->alpha, "Flux; reduced modulo 1")->capture_default_str();
  app->add_option("--b0", o->b0, "Field strength B0 > 0")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--kmin", o->kmin, "Smallest angular index")->capture_default_str();
  app->add_option("--kmax", o->kmax, "Largest angular index")->capture_default_str();
  app->add_option("--mmax", o->mmax, "Largest radial index")->check(CLI::NonNegativeNumber)->capture_default_str();
  app->add_option("--lambda-max", o->lambda_max, "Keep eigenvalues <= this (0 keeps all)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto run = [o](Output& out) {
    out.command = "spectrum";
    const double alpha = normalize_alpha(o->alpha, out);
    if (o->kmin > o->kmax) throw UsageError("--kmin: must not exceed --kmax");
    if (static_cast<long>(o->kmax - o->kmin + 1) * (o->mmax + 1) > 4'000'000)
      throw UsageError("--mmax: window larger than 4e6 modes");
    const abk::FieldConfig cfg(alpha, o->b0);
    abk::ModeSet w;
    w.k_min = o->kmin;
    w.k_max = o->kmax;
    w.m_max = o->mmax;
    out.config = {{"alpha", alpha},   {"b0", o->b0},     {"kmin", o->kmin},
                  {"kmax", o->kmax}, {"mmax", o->mmax}, {"lambda_max", o->lambda_max}};

    struct Row {
      abk::ModeIndex mi;
      double lam;
    };
    std::vector<Row> rows;
    for (size_t i = 0; i < w.size(); ++i) {
      const auto mi = w.at(i);
      const double lam = abk::eigenvalue(cfg, mi);
      if (o->lambda_max > 0.0 && lam > o->lambda_max * (1.0 + kTol)) continue;
      rows.push_back({mi, lam});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      if (a.lam != b.lam) return a.lam < b.lam;
      return a.mi < b.mi;
    });

    out.csv_header = {"k", "m", "alpha_k", "eigenvalue", "eigenvalue_over_b0", "multiplicity", "norm_sq", "tolerance"};
    double bottom = 0.0;
    bool bottom_rule = true;
    for (const auto& r : rows) {
      const int mult = abk::multiplicity_in_window(cfg, r.lam, w, kTol);
      const double nsq = abk::mode_norm_sq(cfg, r.mi);
      const bool at_bottom = std::abs(r.lam - o->b0) <= kTol * o->b0;
      bottom_rule = bottom_rule && r.lam >= o->b0 * (1.0 - kTol) && at_bottom == (r.mi.k <= -1 && r.mi.m == 0);
      bottom = bottom == 0.0 ? r.lam : std::min(bottom, r.lam);
      out.records.push_back({{"k", r.mi.k},
                             {"m", r.mi.m},
                             {"alpha_k", abk::alpha_k(cfg, r.mi.k)},
                             {"eigenvalue", r.lam},
                             {"eigenvalue_over_b0", r.lam / o->b0},
                             {"multiplicity", mult},
                             {"norm_sq", num(nsq)},
                             {"tolerance", kTol},
                             {"anchor", kAnchor}});
      out.csv_rows.push_back({std::to_string(r.mi.k), std::to_string(r.mi.m), csv_num(abk::alpha_k(cfg, r.mi.k)),
                              csv_num(r.lam), csv_num(r.lam / o->b0), std::to_string(mult), csv_num(nsq),
                              csv_num(kTol)});
    }
    out.summary = {{"modes", rows.size()},
                   {"lowest_eigenvalue", rows.empty() ? json(nullptr) : json(bottom)},
                   {"bottom_equals_b0_exactly_for_k_negative_m_zero", bottom_rule}};
    return kOk;
  };
  return {app, run};
}

} // namespace abkcli
