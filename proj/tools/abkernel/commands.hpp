#pragma once

#include <functional>

#include "common.hpp"

namespace abkcli {

struct Command {
  CLI::App* app = nullptr;
  std::function<int(Output&)> run;
};

Command add_heat(CLI::App& root, const Defaults& d, const Globals& g);
Command add_spectrum(CLI::App& root, const Defaults& d, const Globals& g);
Command add_decay(CLI::App& root, const Defaults& d, const Globals& g);
Command add_strichartz(CLI::App& root, const Defaults& d, const Globals& g);
Command add_verify(CLI::App& root, const Defaults& d, const Globals& g);

} // namespace abkcli
