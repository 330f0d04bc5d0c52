// Command-line front end: one subcommand per output family plus a self-check.
//
//   evolve         time series of the measures at fixed parameters
//   map            (t, h1) field map
//   revival-scan   size family, onset detection and the linear scaling fit
//   critical-scan  long-time plateau vs h1 with per-measure argmax
//   verify         randomized oracle-equivalence suites
//
// All numeric output is deterministic: --threads changes speed only.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xychain/analysis.hpp"
#include "xychain/config.hpp"
#include "xychain/table.hpp"
#include "xychain/verify.hpp"
#include "xychain/version.hpp"

namespace {

using namespace xychain;

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir = ".";
  std::string measures = "cl1,rec,lqcx,lqcy,lqcz,qfi";
  int threads = 1;
  bool plot_script = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--config", opt.config_path, "configuration file path");
  cmd->add_option("--set", opt.overrides,
                  "key=value override, applied after --config");
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--measures", opt.measures,
                  "comma-separated subset of cl1,rec,lqcx,lqcy,lqcz,qfi");
  cmd->add_option("--threads", opt.threads, "worker threads (speed only)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--plot-script", opt.plot_script,
                "also write a gnuplot companion script");
}

RunConfig load_config(const CommonOptions& opt) {
  KeyValueMap map;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path, std::ios::binary);
    if (!in)
      throw std::runtime_error("cannot open config " + opt.config_path);
    std::ostringstream text;
    text << in.rdbuf();
    const ConfigResult raw = parse_raw(text.str(), map);
    if (!raw.errors.empty()) {
      std::string msg = "config errors:";
      for (const auto& e : raw.errors) msg += "\n  " + e;
      throw std::runtime_error(msg);
    }
  }
  for (const auto& assignment : opt.overrides)
    if (const auto err = apply_override(map, assignment))
      throw std::runtime_error(*err);
  ConfigResult built = build_config(map);
  if (!built.ok()) {
    std::string msg = "config errors:";
    for (const auto& e : built.errors) msg += "\n  " + e;
    throw std::runtime_error(msg);
  }
  return *built.config;
}

std::vector<MeasureColumn> columns_for(const CommonOptions& opt,
                                       const RunConfig& cfg) {
  auto columns = select_columns(opt.measures);
  for (auto& col : columns)
    if (col.name == "rec") col.scale = 1.0 / std::log2(cfg.rec_base);
  return columns;
}

std::string output_path(const CommonOptions& opt, const std::string& name) {
  std::filesystem::create_directories(opt.out_dir);
  return (std::filesystem::path(opt.out_dir) / name).string();
}

void write_series_plot_script(const std::string& csv,
                              const std::vector<MeasureColumn>& columns,
                              const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  out << "set datafile separator ','\n"
      << "set xlabel 't'\n"
      << "plot";
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << (i ? ", \\\n  " : " ") << '\'' << csv << "' using 1:" << i + 2
        << " with lines title '" << columns[i].name << '\'';
  out << '\n';
}

void write_map_plot_script(const std::string& csv,
                           const std::string& measure,
                           const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  out << "set datafile separator ','\n"
      << "set xlabel 'h1'\nset ylabel 't'\n"
      << "set view map\n"
      << "splot '" << csv << "' using 2:1:3 with points palette title '"
      << measure << "'\n";
}

int cmd_evolve(const CommonOptions& opt) {
  const RunConfig cfg = load_config(opt);
  const auto columns = columns_for(opt, cfg);
  const SeriesResult series =
      evolve_series(cfg.params, cfg.t_axis(), opt.threads);
  const std::string csv = output_path(opt, "evolve.csv");
  write_series_table(series, columns, csv);
  std::cout << "wrote " << csv << '\n';
  if (opt.plot_script) {
    const std::string gp = output_path(opt, "evolve.gp");
    write_series_plot_script("evolve.csv", columns, gp);
    std::cout << "wrote " << gp << '\n';
  }
  return 0;
}

int cmd_map(const CommonOptions& opt) {
  const RunConfig cfg = load_config(opt);
  const auto columns = columns_for(opt, cfg);
  const MapResult map =
      field_map(cfg.params, cfg.t_axis(), cfg.h1_axis(), opt.threads);
  const std::string csv = output_path(opt, "map.csv");
  write_map_table(map, columns, csv);
  std::cout << "wrote " << csv << '\n';
  if (opt.plot_script) {
    const std::string gp = output_path(opt, "map.gp");
    write_map_plot_script("map.csv", columns.front().name, gp);
    std::cout << "wrote " << gp << '\n';
  }
  return 0;
}

Axis1D size_time_axis(const RunConfig& cfg, int n_sites) {
  // Revival/separation onsets sit near t ~ N/4; 0.4 N leaves headroom while
  // keeping the baseline window clear of them.
  return make_axis_step(0.0, 0.4 * n_sites, cfg.dt);
}

int cmd_revival_scan(const CommonOptions& opt, const std::string& signal_name,
                     bool separation) {
  const RunConfig cfg = load_config(opt);
  const auto signal_cols = select_columns(signal_name);
  if (signal_cols.size() != 1)
    throw std::runtime_error("--signal takes exactly one measure");
  double MeasureSet::* field = signal_cols.front().field;

  std::vector<int> sizes = cfg.sizes;
  const int n_ref = *std::max_element(sizes.begin(), sizes.end());

  std::vector<double> fit_n, fit_t;
  std::vector<std::vector<double>> rows;
  for (int n : sizes) {
    if (separation && n == n_ref) continue;
    const Axis1D axis = size_time_axis(cfg, n);
    ModelParams p = make_params(n, cfg.params.gamma, cfg.params.j0,
                                cfg.params.j1, cfg.params.h0, cfg.params.h1,
                                cfg.params.temperature);
    const SeriesResult series = evolve_series(p, axis, opt.threads);
    std::vector<double> t(axis.count);
    for (int i = 0; i < axis.count; ++i) t[i] = axis.value(i);

    std::optional<double> onset;
    if (separation) {
      ModelParams pr = make_params(n_ref, cfg.params.gamma, cfg.params.j0,
                                   cfg.params.j1, cfg.params.h0,
                                   cfg.params.h1, cfg.params.temperature);
      const SeriesResult ref = evolve_series(pr, axis, opt.threads);
      onset = detect_separation(t, series.column(field), ref.column(field),
                                cfg.detection);
    } else {
      onset = detect_revival(t, series.column(field), cfg.detection);
    }
    const double value = onset.value_or(std::nan(""));
    rows.push_back({static_cast<double>(n), value});
    if (onset) {
      fit_n.push_back(n);
      fit_t.push_back(*onset);
    }
  }

  std::vector<std::string> preamble{std::string("xychain v") + kVersion,
                                    std::string(separation ? "separation"
                                                           : "revival") +
                                        " scan, signal = " + signal_name};
  if (fit_n.size() >= 2) {
    const LinearFit fit = linear_fit(fit_n, fit_t);
    preamble.push_back("fit slope = " + format_value(fit.slope));
    preamble.push_back("fit intercept = " + format_value(fit.intercept));
    preamble.push_back("fit r2 = " + format_value(fit.r2));
  } else {
    preamble.push_back("fit: not enough detected onsets");
  }

  const std::string csv =
      output_path(opt, separation ? "separation_scan.csv" : "revival_scan.csv");
  write_generic_table(preamble, {"N", "t_onset"}, rows, csv);
  std::cout << "wrote " << csv << '\n';
  for (const auto& line : preamble) std::cout << "# " << line << '\n';
  return 0;
}

int cmd_critical_scan(const CommonOptions& opt) {
  const RunConfig cfg = load_config(opt);
  const auto columns = columns_for(opt, cfg);
  const Axis1D h1_axis = cfg.h1_axis();
  const auto plateau = relaxed_scan(cfg.params, h1_axis, opt.threads);

  std::vector<double> h1(h1_axis.count);
  for (int i = 0; i < h1_axis.count; ++i) h1[i] = h1_axis.value(i);

  std::vector<std::string> preamble{std::string("xychain v") + kVersion,
                                    "long-time plateau scan over h1"};
  std::vector<std::string> header{"h1"};
  std::vector<std::vector<double>> rows(h1_axis.count);
  for (int i = 0; i < h1_axis.count; ++i) rows[i].push_back(h1[i]);
  for (const auto& col : columns) {
    header.push_back(col.name);
    std::vector<double> statistic(h1_axis.count);
    for (int i = 0; i < h1_axis.count; ++i) {
      statistic[i] = col.scale * (plateau[i].*(col.field));
      rows[i].push_back(statistic[i]);
    }
    const CriticalPoint cp = locate_critical_field(h1, statistic);
    preamble.push_back("argmax " + col.name + " = " + format_value(cp.h1) +
                       (cp.degenerate ? " (degenerate)" : ""));
  }

  const std::string csv = output_path(opt, "critical_scan.csv");
  write_generic_table(preamble, header, rows, csv);
  std::cout << "wrote " << csv << '\n';
  for (const auto& line : preamble) std::cout << "# " << line << '\n';
  return 0;
}

int cmd_verify(int points, std::uint64_t seed) {
  const auto results = run_oracle_suites(points, seed);
  bool all = true;
  std::printf("%-24s %8s %12s %10s  %s\n", "suite", "points", "max_error",
              "tolerance", "status");
  for (const auto& r : results) {
    std::printf("%-24s %8d %12.3e %10.0e  %s\n", r.name.c_str(), r.points,
                r.max_error, r.tolerance, r.passed ? "pass" : "FAIL");
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact post-quench dynamics of the transverse-field XY chain"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("xychain ") + kVersion);

  CommonOptions evolve_opt, map_opt, revival_opt, critical_opt;
  std::string signal = "rec";
  bool separation = false;
  int verify_points = 1000;
  std::uint64_t verify_seed = 12345;

  auto* evolve = app.add_subcommand("evolve", "time series of the measures");
  add_common(evolve, evolve_opt);

  auto* map_cmd = app.add_subcommand("map", "(t, h1) field map");
  add_common(map_cmd, map_opt);

  auto* revival =
      app.add_subcommand("revival-scan", "size family onsets + scaling fit");
  add_common(revival, revival_opt);
  revival->add_option("--signal", signal, "measure used as onset signal");
  revival->add_flag("--separation", separation,
                    "detect pairwise separation from the largest size");

  auto* critical =
      app.add_subcommand("critical-scan", "plateau vs h1 with argmax");
  add_common(critical, critical_opt);

  auto* verify = app.add_subcommand("verify", "oracle-equivalence suites");
  verify->add_option("--points", verify_points, "randomized sample count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "sample seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (evolve->parsed()) return cmd_evolve(evolve_opt);
    if (map_cmd->parsed()) return cmd_map(map_opt);
    if (revival->parsed())
      return cmd_revival_scan(revival_opt, signal, separation);
    if (critical->parsed()) return cmd_critical_scan(critical_opt);
    if (verify->parsed()) return cmd_verify(verify_points, verify_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
