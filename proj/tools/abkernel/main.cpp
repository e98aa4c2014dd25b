#include <iostream>

#include "commands.hpp"

#include "abkernel/errors.hpp"

using namespace abkcli;

namespace {

int fail(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return code;
}

} // namespace

int main(int argc, char** argv) {
  Globals g;
  Defaults d;
  std::vector<Command> cmds;
  CLI::App app{"Heat kernel, spectral and dispersive estimates for the Aharonov-Bohm magnetic Hamiltonian", "abkernel"};
  try {
    d = load_defaults(argc, argv);
    g.output = pick(d.doc, "output", g.output);
    g.seed = pick(d.doc, "seed", g.seed);
    g.threads = pick(d.doc, "threads", g.threads);
    for (const auto& [key, value] : d.doc.items())
      if (!value.is_object() && key != "output" && key != "seed" && key != "threads")
        throw UsageError("config has unknown top-level key '" + key + "'");

    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", g.config_path, "JSON file with defaults (sections per subcommand)");
    app.add_option("--out", g.out_path, "Write output to this path instead of stdout");
    app.add_option("--output", g.output, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (default ABKERNEL_THREADS, else all cores)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
    app.add_flag("--no-timing", g.no_timing, "Omit wall-clock fields");

    cmds.push_back(add_heat(app, d, g));
    cmds.push_back(add_spectrum(app, d, g));
    cmds.push_back(add_decay(app, d, g));
    cmds.push_back(add_strichartz(app, d, g));
    cmds.push_back(add_verify(app, d, g));
  } catch (const UsageError& e) {
    return fail(kBadFlags, e.what());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadFlags;
  }

  apply_threads(g);
  for (auto& c : cmds) {
    if (!c.app->parsed()) continue;
    Output out;
    try {
      const int rc = c.run(out);
      emit(out, g);
      return rc;
    } catch (const UsageError& e) {
      return fail(kBadFlags, e.what());
    } catch (const abk::AdmissibilityError& e) {
      return fail(kInadmissible, e.what());
    } catch (const abk::EmptyRegimeError& e) {
      return fail(kEmptyRegime, e.what());
    } catch (const abk::DomainError& e) {
      return fail(kBadFlags, e.what());
    } catch (const abk::Error& e) {
      return fail(kNumericFailure, e.what());
    } catch (const std::exception& e) {
      return fail(kNumericFailure, e.what());
    }
  }
  return kBadFlags;
}
