#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abkcli {

struct Check {
  std::string suite;
  std::string name;
  std::string anchor;
  bool pass = false;
  double measured = 0.0;
  std::string relation;  // "<=" or ">="
  double bound = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  int grid_refine = 1;
};

const std::vector<std::string>& suite_names();

// Runs one suite; a check that throws is recorded as failed with the message
// in note.
std::vector<Check> run_suite(const std::string& name, const SuiteOptions& opt);

} // namespace abkcli
