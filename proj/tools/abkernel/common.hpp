#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "abkernel/spectrum.hpp"

namespace abkcli {

using json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kBadFlags = 1,
  kDisagreement = 2,
  kNumericFailure = 3,
  kVerifyFailed = 4,
  kEmptyRegime = 5,
  kInadmissible = 6,
};

// Bad user input detected after CLI11 parsing; maps to exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string config_path;
  std::string out_path;
  std::string output = "json";
  int threads = 0;
  std::uint64_t seed = 42;
  bool no_timing = false;
};

// Loaded --config file; sections are keyed by subcommand, globals at top level.
struct Defaults {
  json doc = json::object();
  json section(const std::string& name) const;
};

// Finds --config in argv before CLI11 runs so its values can seed the defaults.
Defaults load_defaults(int argc, char** argv);

template <class T>
T pick(const json& sec, const char* key, T fallback) {
  if (!sec.contains(key)) return fallback;
  try {
    return sec.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("config key '") + key + "' has the wrong type");
  }
}

// Rejects keys that no option of the subcommand knows about.
void check_section_keys(const json& sec, const std::string& name, const std::vector<std::string>& known);

struct Output {
  std::string command;
  json config = json::object();
  json warnings = json::array();
  json summary = json::object();
  json records = json::array();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

void add_warning(Output& out, const std::string& flag, const std::string& message);
void emit(const Output& out, const Globals& g);

std::string csv_num(double v);
std::string csv_str(const std::string& s);
json num(double v);

// "r,theta" with r >= 0.
abk::PolarPoint parse_point(const std::string& s, const std::string& flag);
json point_json(abk::PolarPoint p);

// Subtracts floor(alpha); exact integers are rejected.
double normalize_alpha(double alpha, Output& out);

// Accepts a real number or inf/infinity.
double parse_exponent(const std::string& s, const std::string& flag);

std::vector<double> log_spaced(double lo, double hi, int n);

void apply_threads(const Globals& g);

} // namespace abkcli
