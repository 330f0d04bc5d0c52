// Textual run configuration: `key = value` lines with `#` comments.
//
// Parsing is two-stage so command-line overrides compose naturally: text is
// first read into a key/value map (duplicates rejected), then the map is
// validated into a RunConfig with every error reported at once.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xychain/analysis.hpp"
#include "xychain/model.hpp"

namespace xychain {

/// A fully validated run description.
struct RunConfig {
  ModelParams params;

  // Time axis (series and maps).
  double t_min = 0.0;
  double t_max = 20.0;
  double dt = 0.05;

  // h1 axis (maps and critical scans).
  double h1_min = 0.05;
  double h1_max = 2.0;
  double dh1 = 0.01;

  /// Chain lengths for revival and separation scans.
  std::vector<int> sizes{100, 200, 300, 400, 500, 600};

  DetectionConfig detection;

  /// Logarithm base for the reported relative entropy of coherence. The
  /// internal computation is base 2; other bases rescale the column.
  double rec_base = 2.0;

  Axis1D t_axis() const;
  Axis1D h1_axis() const;
};

/// Either a config or a non-empty list of human-readable errors.
struct ConfigResult {
  std::optional<RunConfig> config;
  std::vector<std::string> errors;

  bool ok() const { return config.has_value(); }
};

using KeyValueMap = std::map<std::string, std::string>;

/// Splits config text into key/value pairs. Reports malformed lines and
/// duplicate keys; does not validate values.
ConfigResult parse_raw(const std::string& text, KeyValueMap& out);

/// Validates a key/value map: unknown keys rejected, missing required keys
/// (N, gamma, J0, J1, h0, h1, T) reported all at once, typed values checked.
ConfigResult build_config(const KeyValueMap& map);

/// parse_raw + build_config in one call.
ConfigResult parse_config(const std::string& text);

/// Parses one `key=value` override into an existing map (replacing any prior
/// value). Returns an error message, or nullopt on success.
std::optional<std::string> apply_override(KeyValueMap& map,
                                          const std::string& assignment);

}  // namespace xychain
