#include <memory>

#include "commands.hpp"
#include "suites.hpp"

namespace abkcli {

namespace {

struct VerifyOpts {
  std::string suite = "all";
  int grid_refine = 1;
};

} // namespace

Command add_verify(CLI::App& root, const Defaults& d, const Globals& g) {
  auto o = std::make_shared<VerifyOpts>();
  const json sec = d.section("verify");
  check_section_keys(sec, "verify", {"suite", "grid_refine"});
  o->suite = pick(sec, "suite", o->suite);
  o->grid_refine = pick(sec, "grid_refine", o->grid_refine);

  auto* app = root.add_subcommand("verify", "Run the invariant suites");
  app->add_option("--suite", o->suite, "specfun, spectrum, kernels, propagators, analysis or all")
      ->check(CLI::IsMember({"specfun", "spectrum", "kernels", "propagators", "analysis", "all"}))
      ->capture_default_str();
  app->add_option("--grid-refine", o->grid_refine, "Base refinement for grid-dependent checks")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();

  auto run = [o, &g](Output& out) {
    out.command = "verify";
    out.config = {{"suite", o->suite}, {"grid_refine", o->grid_refine}, {"seed", g.seed}};
    SuiteOptions opt;
    opt.seed = g.seed;
    opt.grid_refine = o->grid_refine;
    std::vector<std::string> names;
    if (o->suite == "all") names = suite_names();
    else names = {o->suite};

    out.csv_header = {"suite", "name", "anchor", "status", "measured", "relation", "bound", "tolerance", "note"};
    int passed = 0, failed = 0;
    for (const auto& n : names)
      for (const auto& c : run_suite(n, opt)) {
        (c.pass ? passed : failed) += 1;
        out.records.push_back({{"suite", c.suite},
                               {"name", c.name},
                               {"anchor", c.anchor},
                               {"status", c.pass ? "pass" : "fail"},
                               {"measured", num(c.measured)},
                               {"relation", c.relation},
                               {"bound", num(c.bound)},
                               {"tolerance", num(c.tolerance)},
                               {"note", c.note}});
        out.csv_rows.push_back({c.suite, csv_str(c.name), csv_str(c.anchor), c.pass ? "pass" : "fail",
                                csv_num(c.measured), c.relation, csv_num(c.bound), csv_num(c.tolerance),
                                csv_str(c.note)});
      }
    out.summary = {{"passed", passed}, {"failed", failed}};
    return failed == 0 ? kOk : kVerifyFailed;
  };
  return {app, run};
}

} // namespace abkcli
