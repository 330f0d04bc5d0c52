#include "xychain/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace xychain {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto r = std::from_chars(begin, end, out);
  return r.ec == std::errc{} && r.ptr == end && std::isfinite(out);
}

bool parse_int(const std::string& s, long& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto r = std::from_chars(begin, end, out);
  return r.ec == std::errc{} && r.ptr == end;
}

const char* const kRequired[] = {"N", "gamma", "J0", "J1", "h0", "h1", "T"};
const char* const kOptional[] = {"t_min",        "t_max",
                                 "dt",           "h1_min",
                                 "h1_max",       "dh1",
                                 "sizes",        "relax_fraction",
                                 "window_fraction", "threshold_k",
                                 "peak_fraction",   "rec_base"};

bool known_key(const std::string& k) {
  for (const char* r : kRequired)
    if (k == r) return true;
  for (const char* o : kOptional)
    if (k == o) return true;
  return false;
}

}  // namespace

Axis1D RunConfig::t_axis() const { return make_axis_step(t_min, t_max, dt); }
Axis1D RunConfig::h1_axis() const {
  return make_axis_step(h1_min, h1_max, dh1);
}

ConfigResult parse_raw(const std::string& text, KeyValueMap& out) {
  ConfigResult result;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      result.errors.push_back("line " + std::to_string(lineno) +
                              ": expected `key = value`");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      result.errors.push_back("line " + std::to_string(lineno) +
                              ": empty key or value");
      continue;
    }
    if (!out.emplace(key, value).second)
      result.errors.push_back("line " + std::to_string(lineno) +
                              ": duplicate key `" + key + "`");
  }
  return result;
}

ConfigResult build_config(const KeyValueMap& map) {
  ConfigResult result;
  RunConfig cfg;
  auto& errors = result.errors;

  for (const auto& [key, value] : map)
    if (!known_key(key)) errors.push_back("unknown key `" + key + "`");
  for (const char* key : kRequired)
    if (!map.count(key))
      errors.push_back(std::string("missing required key `") + key + "`");

  long n = 0;
  double gamma = 0, j0 = 0, j1 = 0, h0 = 0, h1 = 0, temperature = 0;
  auto want_double = [&](const char* key, double& slot) {
    const auto it = map.find(key);
    if (it == map.end()) return;
    if (!parse_double(it->second, slot))
      errors.push_back(std::string(key) + ": expected number, got `" +
                       it->second + "`");
  };
  if (const auto it = map.find("N"); it != map.end()) {
    if (!parse_int(it->second, n) || n <= 0 || n % 2 != 0)
      errors.push_back("N: expected even integer");
  }
  want_double("gamma", gamma);
  want_double("J0", j0);
  want_double("J1", j1);
  want_double("h0", h0);
  want_double("h1", h1);
  want_double("T", temperature);

  want_double("t_min", cfg.t_min);
  want_double("t_max", cfg.t_max);
  want_double("dt", cfg.dt);
  want_double("h1_min", cfg.h1_min);
  want_double("h1_max", cfg.h1_max);
  want_double("dh1", cfg.dh1);
  want_double("relax_fraction", cfg.detection.relax_fraction);
  want_double("window_fraction", cfg.detection.window_fraction);
  want_double("threshold_k", cfg.detection.threshold_k);
  want_double("peak_fraction", cfg.detection.peak_fraction);
  want_double("rec_base", cfg.rec_base);

  if (const auto it = map.find("sizes"); it != map.end()) {
    std::vector<int> sizes;
    std::istringstream parts(it->second);
    std::string token;
    bool bad = false;
    while (std::getline(parts, token, ',')) {
      long v = 0;
      if (!parse_int(trim(token), v) || v <= 0 || v % 2 != 0) {
        bad = true;
        break;
      }
      sizes.push_back(static_cast<int>(v));
    }
    if (bad || sizes.empty())
      errors.push_back("sizes: expected comma-separated even integers");
    else
      cfg.sizes = std::move(sizes);
  }

  if (!(cfg.dt > 0.0)) errors.push_back("dt: must be > 0");
  if (!(cfg.dh1 > 0.0)) errors.push_back("dh1: must be > 0");
  if (!(cfg.t_min < cfg.t_max)) errors.push_back("t_max: must exceed t_min");
  if (!(cfg.h1_min < cfg.h1_max))
    errors.push_back("h1_max: must exceed h1_min");
  if (!(cfg.rec_base > 1.0)) errors.push_back("rec_base: must be > 1");

  if (errors.empty()) {
    try {
      cfg.params = make_params(static_cast<int>(n), gamma, j0, j1, h0, h1,
                               temperature);
    } catch (const std::invalid_argument& e) {
      errors.push_back(e.what());
    }
  }
  if (errors.empty()) result.config = std::move(cfg);
  return result;
}

ConfigResult parse_config(const std::string& text) {
  KeyValueMap map;
  ConfigResult raw = parse_raw(text, map);
  if (!raw.errors.empty()) return raw;
  return build_config(map);
}

std::optional<std::string> apply_override(KeyValueMap& map,
                                          const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    return "override `" + assignment + "`: expected key=value";
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  if (key.empty() || value.empty())
    return "override `" + assignment + "`: empty key or value";
  map[key] = value;
  return std::nullopt;
}

}  // namespace xychain
