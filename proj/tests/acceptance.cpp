// Acceptance gate: one line per criterion, PASS or FAIL, with the measured
// numbers. Exit code is the number of failed criteria.
//
// Usage: acceptance <path-to-cli-binary>
// The CLI path is needed by the determinism criterion, which compares output
// files produced with different --threads settings byte for byte.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "xychain/analysis.hpp"
#include "xychain/sweep.hpp"
#include "xychain/verify.hpp"

namespace {

using namespace xychain;

const int kThreads =
    std::max(1, std::min(8, static_cast<int>(
                                std::thread::hardware_concurrency())));
const std::vector<int> kSizes{100, 200, 300, 400, 500, 600};
constexpr double kTauTarget = 0.2405;
constexpr double kTauTol = 0.010;

struct Criterion {
  int number;
  std::string label;
  bool passed;
  std::string detail;
};

std::vector<Criterion> g_results;

void report(int number, const std::string& label, bool passed,
            const std::string& detail) {
  g_results.push_back({number, label, passed, detail});
  std::printf("[%s] criterion %d (%s): %s\n", passed ? "PASS" : "FAIL",
              number, label.c_str(), detail.c_str());
  std::fflush(stdout);
}

ModelParams quench(int n, double gamma, double h0, double h1,
                   double temperature = 0.0) {
  return make_params(n, gamma, 1.0, 1.0, h0, h1, temperature);
}

Axis1D size_axis(int n) { return make_axis_step(0.0, 0.4 * n, 0.05); }

std::vector<double> axis_values(const Axis1D& axis) {
  std::vector<double> t(axis.count);
  for (int i = 0; i < axis.count; ++i) t[i] = axis.value(i);
  return t;
}

/// Revival-onset scaling fit of the REC signal over the size family.
LinearFit revival_fit(double h0, double h1, int& detected) {
  std::vector<double> fit_n, fit_t;
  for (int n : kSizes) {
    const Axis1D axis = size_axis(n);
    const SeriesResult series =
        evolve_series(quench(n, 1.0, h0, h1), axis, kThreads);
    const auto onset = detect_revival(axis_values(axis),
                                      series.column(&MeasureSet::rec));
    if (onset) {
      fit_n.push_back(n);
      fit_t.push_back(*onset);
    }
  }
  detected = static_cast<int>(fit_n.size());
  if (detected < 2) return {};
  return linear_fit(fit_n, fit_t);
}

/// Pairwise separation-onset scaling: each size against the largest.
LinearFit separation_fit(double h0, double h1, int& detected) {
  const int n_ref = kSizes.back();
  std::vector<double> fit_n, fit_t;
  for (int n : kSizes) {
    if (n == n_ref) continue;
    const Axis1D axis = size_axis(n);
    const SeriesResult series =
        evolve_series(quench(n, 1.0, h0, h1), axis, kThreads);
    const SeriesResult ref =
        evolve_series(quench(n_ref, 1.0, h0, h1), axis, kThreads);
    const auto onset = detect_separation(axis_values(axis),
                                         series.column(&MeasureSet::rec),
                                         ref.column(&MeasureSet::rec));
    if (onset) {
      fit_n.push_back(n);
      fit_t.push_back(*onset);
    }
  }
  detected = static_cast<int>(fit_n.size());
  if (detected < 2) return {};
  return linear_fit(fit_n, fit_t);
}

struct Scan {
  std::vector<double> h1;
  std::vector<MeasureSet> plateau;

  double argmax(double MeasureSet::* field) const {
    std::vector<double> column(plateau.size());
    for (std::size_t i = 0; i < plateau.size(); ++i)
      column[i] = plateau[i].*field;
    return locate_critical_field(h1, column).h1;
  }
  double peak(double MeasureSet::* field) const {
    double best = plateau.front().*field;
    for (const auto& m : plateau) best = std::max(best, m.*field);
    return best;
  }
};

/// Long-time plateau of every measure over the full h1 axis.
Scan plateau_scan(double gamma, double h0, double temperature) {
  const Axis1D h1_axis = make_axis_step(0.05, 2.0, 0.01);
  Scan scan;
  scan.h1 = axis_values(h1_axis);
  scan.plateau = relaxed_scan(quench(400, gamma, h0, /*h1=*/1.0, temperature),
                              h1_axis, kThreads);
  return scan;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

void criterion_1_tau() {
  int detected = 0;
  const LinearFit fit = revival_fit(0.7, 1.0, detected);
  const bool ok = detected == static_cast<int>(kSizes.size()) &&
                  std::abs(fit.slope - kTauTarget) <= kTauTol &&
                  fit.r2 >= 0.999;
  report(1, "tau scaling",
         ok,
         fmt("REC revival slope=%.6f (target %.4f+/-%.3f), r2=%.6f, "
             "onsets detected %d/6",
             fit.slope, kTauTarget, kTauTol, fit.r2, detected));
}

void criterion_2_universality() {
  const double fields[] = {0.5, 0.7, 0.9, 1.5};
  std::vector<double> slopes;
  std::string detail;
  bool ok = true;
  for (double h0 : fields) {
    int detected = 0;
    const LinearFit fit = revival_fit(h0, 1.0, detected);
    ok = ok && detected == static_cast<int>(kSizes.size()) && fit.r2 >= 0.999;
    slopes.push_back(fit.slope);
    detail += fmt("h0=%.1f:%.6f ", h0, fit.slope);
  }
  const auto [lo, hi] = std::minmax_element(slopes.begin(), slopes.end());
  ok = ok && (*hi - *lo) <= 0.010;
  report(2, "tau universality", ok,
         detail + fmt("(max pairwise spread %.6f, tol 0.010)", *hi - *lo));
}

void criterion_3_separation() {
  int detected = 0;
  const LinearFit fit = separation_fit(1.0, 1.5, detected);
  const bool ok = detected == static_cast<int>(kSizes.size()) - 1 &&
                  std::abs(fit.slope - kTauTarget) <= kTauTol;
  report(3, "separation scaling", ok,
         fmt("slope=%.6f (target %.4f+/-%.3f), r2=%.6f, onsets %d/5",
             fit.slope, kTauTarget, kTauTol, fit.r2, detected));
}

Scan g_scan_h07_t0;  // shared between criteria 4 and 5

void criterion_4_criticality() {
  g_scan_h07_t0 = plateau_scan(1.0, 0.7, 0.0);
  const Scan scan_h15 = plateau_scan(1.0, 1.5, 0.0);

  const double lqcx_arg = g_scan_h07_t0.argmax(&MeasureSet::lqc_x);
  const double lqcz_arg = scan_h15.argmax(&MeasureSet::lqc_z);
  const double rec_arg = g_scan_h07_t0.argmax(&MeasureSet::rec);
  const double cl1_arg = g_scan_h07_t0.argmax(&MeasureSet::cl1);
  const double qfi_arg = g_scan_h07_t0.argmax(&MeasureSet::qfi);

  const bool lqcx_ok = std::abs(lqcx_arg - 1.0) <= 0.02;
  const bool lqcz_ok = std::abs(lqcz_arg - 1.0) <= 0.02;
  auto in_band = [](double v) { return v >= 0.4 - 1e-9 && v <= 0.6 + 1e-9; };
  const bool band_ok = in_band(rec_arg) && in_band(cl1_arg) && in_band(qfi_arg);

  report(4, "criticality detection", lqcx_ok && lqcz_ok && band_ok,
         fmt("lqcx argmax=%.2f (1.00+/-0.02), lqcz argmax=%.2f (1.00+/-0.02), "
             "rec=%.2f cl1=%.2f qfi=%.2f (band [0.4,0.6])",
             lqcx_arg, lqcz_arg, rec_arg, cl1_arg, qfi_arg));
}

void criterion_5_temperature() {
  const Scan scan_t1 = plateau_scan(1.0, 0.7, 1.0);
  const Scan scan_t5 = plateau_scan(1.0, 0.7, 5.0);

  const double arg_t1 = scan_t1.argmax(&MeasureSet::lqc_x);
  const double peak_t0 = g_scan_h07_t0.peak(&MeasureSet::lqc_x);
  const double peak_t1 = scan_t1.peak(&MeasureSet::lqc_x);
  const double peak_t5 = scan_t5.peak(&MeasureSet::lqc_x);

  const bool arg_ok = std::abs(arg_t1 - 1.0) <= 0.05;
  const bool damping_ok = peak_t1 < peak_t0 && peak_t5 < peak_t1;
  report(5, "finite-temperature signalling", arg_ok && damping_ok,
         fmt("T=1 lqcx argmax=%.2f (1.00+/-0.05); peaks T0=%.4f > T1=%.4f > "
             "T5=%.4f (%s)",
             arg_t1, peak_t0, peak_t1, peak_t5,
             damping_ok ? "ordered" : "NOT ordered"));
}

void criterion_6_anisotropy() {
  const Axis1D t_axis = make_axis_step(0.0, 20.0, 0.05);
  const Axis1D h1_axis = make_axis_step(0.05, 2.0, 0.01);
  const MapResult plus =
      field_map(quench(100, 0.5, 0.7, 1.0), t_axis, h1_axis, kThreads);
  const MapResult minus =
      field_map(quench(100, -0.5, 0.7, 1.0), t_axis, h1_axis, kThreads);
  double mirror_err = 0.0;
  for (std::size_t i = 0; i < plus.cells.size(); ++i)
    mirror_err = std::max(
        mirror_err, std::abs(plus.cells[i].lqc_x - minus.cells[i].lqc_y));

  const Scan scan_x = plateau_scan(0.5, 0.7, 0.0);
  const Scan scan_z = plateau_scan(0.5, 1.5, 0.0);
  const double lqcx_arg = scan_x.argmax(&MeasureSet::lqc_x);
  const double lqcz_arg = scan_z.argmax(&MeasureSet::lqc_z);

  const bool ok = mirror_err <= 1e-10 && std::abs(lqcx_arg - 1.0) <= 0.02 &&
                  std::abs(lqcz_arg - 1.0) <= 0.02;
  report(6, "anisotropy symmetry", ok,
         fmt("max |lqc_y(-0.5) - lqc_x(+0.5)| = %.2e (tol 1e-10); gamma=0.5 "
             "lqcx argmax=%.2f, lqcz argmax=%.2f (1.00+/-0.02)",
             mirror_err, lqcx_arg, lqcz_arg));
}

void criterion_7_oracles() {
  const auto suites = run_oracle_suites(1000);
  bool ok = true;
  std::string detail;
  for (const auto& s : suites) {
    ok = ok && s.passed;
    detail += fmt("%s=%.1e%s ", s.name.c_str(), s.max_error,
                  s.passed ? "" : "(FAIL)");
  }
  report(7, "oracle equivalence", ok, detail);
}

void criterion_8_equilibrium() {
  const ModelParams configs[] = {
      make_params(64, 1.0, 1.0, 1.0, 0.7, 0.7, 0.0),
      make_params(64, 0.5, 0.8, 0.8, 1.2, 1.2, 2.0),
      make_params(64, 1.0, 1.0, 1.0, 1.0, 1.0, 0.5),  // critical, gapless
  };
  const Axis1D axis = make_axis_step(0.0, 20.0, 0.1);
  double worst = 0.0;
  for (const auto& params : configs) {
    const SeriesResult series = evolve_series(params, axis, kThreads);
    const MeasureSet& first = series.cells.front();
    for (const auto& m : series.cells) {
      worst = std::max({worst, std::abs(m.cl1 - first.cl1),
                        std::abs(m.rec - first.rec),
                        std::abs(m.lqc_x - first.lqc_x),
                        std::abs(m.lqc_y - first.lqc_y),
                        std::abs(m.lqc_z - first.lqc_z),
                        std::abs(m.qfi - first.qfi)});
    }
  }
  report(8, "equilibrium constancy", worst <= 1e-12,
         fmt("max drift over zero-quench series = %.2e (tol 1e-12)", worst));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion_9_determinism(const std::string& cli) {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "xychain_acceptance";
  fs::remove_all(base);
  fs::create_directories(base);

  const std::string common =
      "\"" + cli +
      "\" evolve --set N=600 --set gamma=1 --set J0=1 --set J1=1"
      " --set h0=0.7 --set h1=1.0 --set T=0 --set t_max=240 --set dt=0.05";
  const std::string run1 = common + " --threads 1 --out \"" +
                           (base / "one").string() + "\" > /dev/null";
  const std::string run16 = common + " --threads 16 --out \"" +
                            (base / "many").string() + "\" > /dev/null";
  const int rc1 = std::system(run1.c_str());
  const int rc16 = std::system(run16.c_str());

  bool ok = rc1 == 0 && rc16 == 0;
  if (ok) {
    const std::string a = read_file(base / "one" / "evolve.csv");
    const std::string b = read_file(base / "many" / "evolve.csv");
    ok = !a.empty() && a == b;
  }
  report(9, "determinism", ok,
         ok ? "--threads 1 and --threads 16 outputs byte-identical"
            : fmt("mismatch or CLI failure (exit %d / %d)", rc1, rc16));
  fs::remove_all(base);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
    return 2;
  }

  criterion_1_tau();
  criterion_2_universality();
  criterion_3_separation();
  criterion_4_criticality();
  criterion_5_temperature();
  criterion_6_anisotropy();
  criterion_7_oracles();
  criterion_8_equilibrium();
  criterion_9_determinism(argv[1]);

  int failures = 0;
  for (const auto& c : g_results)
    if (!c.passed) ++failures;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(g_results.size()) -
                                              failures,
              g_results.size());
  return failures;
}
