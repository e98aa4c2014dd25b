#include "common.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abkernel/analysis.hpp"
#include "abkernel/parallel.hpp"

namespace abkcli {

json Defaults::section(const std::string& name) const {
  if (!doc.contains(name)) return json::object();
  const auto& s = doc.at(name);
  if (!s.is_object()) throw UsageError("config section '" + name + "' must be an object");
  return s;
}

Defaults load_defaults(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) path = argv[i + 1];
    if (a.rfind("--config=", 0) == 0) path = a.substr(9);
  }
  Defaults d;
  if (path.empty()) return d;
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot open " + path);
  try {
    d.doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("--config: " + path + " is not valid JSON: " + e.what());
  }
  if (!d.doc.is_object()) throw UsageError("--config: top level must be an object");
  return d;
}

void check_section_keys(const json& sec, const std::string& name, const std::vector<std::string>& known) {
  for (const auto& [key, value] : sec.items()) {
    bool found = false;
    for (const auto& k : known) found = found || k == key;
    if (!found) throw UsageError("config section '" + name + "' has unknown key '" + key + "'");
  }
}

void add_warning(Output& out, const std::string& flag, const std::string& message) {
  out.warnings.push_back({{"flag", flag}, {"message", message}});
}

json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

std::string csv_num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string csv_str(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const Output& out, const Globals& g) {
  std::string text;
  if (g.output == "csv") {
    std::ostringstream os;
    for (size_t i = 0; i < out.csv_header.size(); ++i) os << (i ? "," : "") << out.csv_header[i];
    os << "\n";
    for (const auto& row : out.csv_rows) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
    text = os.str();
    if (!out.summary.empty()) std::cerr << "summary: " << out.summary.dump() << "\n";
    for (const auto& w : out.warnings)
      std::cerr << "warning: " << w.at("flag").get<std::string>() << ": " << w.at("message").get<std::string>() << "\n";
  } else {
    json doc;
    doc["schema_version"] = 1;
    doc["command"] = out.command;
    doc["config"] = out.config;
    doc["warnings"] = out.warnings;
    if (!out.summary.empty()) doc["summary"] = out.summary;
    doc["records"] = out.records;
    text = doc.dump(2) + "\n";
  }
  if (g.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) throw UsageError("--out: cannot write " + g.out_path);
  f << text;
}

abk::PolarPoint parse_point(const std::string& s, const std::string& flag) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError(flag + ": expected \"r,theta\", got \"" + s + "\"");
  double r = 0.0, th = 0.0;
  try {
    size_t n1 = 0, n2 = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    r = std::stod(a, &n1);
    th = std::stod(b, &n2);
    if (n1 != a.size() || n2 != b.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected \"r,theta\", got \"" + s + "\"");
  }
  if (!std::isfinite(r) || !std::isfinite(th) || r < 0.0)
    throw UsageError(flag + ": need finite r >= 0 and finite theta, got \"" + s + "\"");
  return abk::PolarPoint(r, th);
}

json point_json(abk::PolarPoint p) { return {{"r", p.r}, {"theta", p.theta}}; }

double normalize_alpha(double alpha, Output& out) {
  if (!std::isfinite(alpha)) throw UsageError("--alpha: must be finite");
  const double a = alpha - std::floor(alpha);
  if (a == 0.0) throw UsageError("--alpha: integer flux " + csv_num(alpha) + " is rejected; need a non-integer value");
  if (a != alpha) add_warning(out, "--alpha", "normalized " + csv_num(alpha) + " to " + csv_num(a));
  return a;
}

double parse_exponent(const std::string& s, const std::string& flag) {
  if (s == "inf" || s == "infinity" || s == "Inf" || s == "INF") return abk::kInf;
  try {
    size_t n = 0;
    const double v = std::stod(s, &n);
    if (n != s.size() || std::isnan(v)) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a number or inf, got \"" + s + "\"");
  }
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> t;
  if (n == 1) return {lo};
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) t.push_back(i == n - 1 ? hi : std::exp(a + (b - a) * i / (n - 1)));
  return t;
}

void apply_threads(const Globals& g) {
  if (g.threads > 0) abk::set_thread_count(g.threads);
}

} // namespace abkcli
