#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "commands.hpp"

#include "abkernel/kernels.hpp"
#include "abkernel/parallel.hpp"

namespace abkcli {

namespace {

struct HeatOpts {
  double alpha = 0.5;
  double b0 = 1.0;
  std::vector<double> t{0.5};
  std::string x = "1,0";
  std::string y = "1,0";
  std::string method = "both";
  double tol = 1e-12;
};

constexpr const char* kAnchor = "heat kernel of the Aharonov-Bohm magnetic Hamiltonian: spectral series and closed form";
constexpr const char* kMehlerAnchor = "Mehler kernel of the constant-field Hamiltonian (zero flux)";

struct PointResult {
  std::vector<abk::KernelValue> values;
  double rel_diff = -1.0;
  double ms = 0.0;
};

} // namespace

Command add_heat(CLI::App& root, const Defaults& d, const Globals& g) {
  auto o = std::make_shared<HeatOpts>();
  const json sec = d.section("heat");
  check_section_keys(sec, "heat", {"alpha", "b0", "t", "x", "y", "method", "tol"});
  o->alpha = pick(sec, "alpha", o->alpha);
  o->b0 = pick(sec, "b0", o->b0);
  o->t = pick(sec, "t", o->t);
  o->x = pick(sec, "x", o->x);
  o->y = pick(sec, "y", o->y);
  o->method = pick(sec, "method", o->method);
  o->tol = pick(sec, "tol", o->tol);

  auto* app = root.add_subcommand("heat", "Evaluate the heat kernel K(t; x, y)");
  app->add_option("--alpha", o->alpha, "Flux; reduced modulo 1")->capture_default_str();
  app->add_option("--b0", o->b0, "Field strength B0 > 0")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--t", o->t, "Times t > 0 (comma-separated for a sweep)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--x", o->x, "First point as r,theta")->capture_default_str();
  app->add_option("--y", o->y, "Second point as r,theta")->capture_default_str();
  app->add_option("--method", o->method, "series, closed, both or mehler")
      ->check(CLI::IsMember({"series", "closed", "both", "mehler"}))
      ->capture_default_str();
  app->add_option("--tol", o->tol, "Series tail and quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto run = [o, &g](Output& out) {
    out.command = "heat";
    const bool mehler = o->method == "mehler";
    double alpha = o->alpha;
    if (mehler) {
      if (alpha != 0.0) add_warning(out, "--alpha", "ignored by --method mehler (zero-flux kernel)");
      alpha = 0.0;
    } else {
      alpha = normalize_alpha(alpha, out);
    }
    const auto x = parse_point(o->x, "--x");
    const auto y = parse_point(o->y, "--y");
    if (o->t.empty()) throw UsageError("--t: need at least one time");
    std::vector<double> ts = o->t;
    std::sort(ts.begin(), ts.end());

    out.config = {{"alpha", alpha}, {"b0", o->b0}, {"t", ts},       {"x", point_json(x)},
                  {"y", point_json(y)}, {"method", o->method}, {"tol", o->tol}};

    std::vector<PointResult> res(ts.size());
    abk::parallel_for(ts.size(), [&](size_t i) {
      const auto t0 = std::chrono::steady_clock::now();
      auto& r = res[i];
      if (mehler) {
        r.values.push_back(abk::mehler_kernel(o->b0, ts[i], x, y));
      } else {
        const abk::FieldConfig cfg(alpha, o->b0);
        if (o->method != "closed") r.values.push_back(abk::heat_kernel_series(cfg, ts[i], x, y, o->tol));
        if (o->method != "series") r.values.push_back(abk::heat_kernel_closed(cfg, ts[i], x, y, o->tol));
      }
      if (r.values.size() == 2) {
        const auto a = r.values[0].value, b = r.values[1].value;
        r.rel_diff = std::abs(a - b) / std::max(std::abs(a), std::abs(b));
      }
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    });

    out.csv_header = {"t", "x_r", "x_theta", "y_r", "y_theta", "method", "re", "im", "abs_error_estimate",
                      "cross_method_rel_diff", "tolerance", "anchor"};
    if (!g.no_timing) out.csv_header.push_back("runtime_ms");
    bool disagree = false;
    double worst = 0.0;
    for (size_t i = 0; i < ts.size(); ++i) {
      const auto& r = res[i];
      json rec;
      rec["t"] = ts[i];
      rec["x"] = point_json(x);
      rec["y"] = point_json(y);
      json vals = json::object();
      for (const auto& v : r.values)
        vals[abk::method_name(v.method)] = {
            {"re", v.value.real()}, {"im", v.value.imag()}, {"abs_error_estimate", num(v.abs_error_estimate)}};
      rec["values"] = vals;
      if (r.rel_diff >= 0.0) {
        rec["cross_method_rel_diff"] = num(r.rel_diff);
        worst = std::max(worst, r.rel_diff);
        if (!(r.rel_diff <= 10.0 * o->tol)) disagree = true;
      }
      rec["tolerance"] = o->tol;
      rec["anchor"] = mehler ? kMehlerAnchor : kAnchor;
      if (!g.no_timing) rec["runtime_ms"] = r.ms;
      out.records.push_back(rec);
      for (const auto& v : r.values) {
        std::vector<std::string> row = {csv_num(ts[i]),
                                        csv_num(x.r),
                                        csv_num(x.theta),
                                        csv_num(y.r),
                                        csv_num(y.theta),
                                        abk::method_name(v.method),
                                        csv_num(v.value.real()),
                                        csv_num(v.value.imag()),
                                        csv_num(v.abs_error_estimate),
                                        r.rel_diff >= 0.0 ? csv_num(r.rel_diff) : "",
                                        csv_num(o->tol),
                                        csv_str(mehler ? kMehlerAnchor : kAnchor)};
        if (!g.no_timing) row.push_back(csv_num(r.ms));
        out.csv_rows.push_back(row);
      }
    }
    if (o->method == "both") {
      out.summary = {{"worst_cross_method_rel_diff", num(worst)},
                     {"disagreement_threshold", 10.0 * o->tol},
                     {"agree", !disagree}};
    }
    return disagree ? kDisagreement : kOk;
  };
  return {app, run};
}

} // namespace abkcli
