#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "xychain/analysis.hpp"

using namespace xychain;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

}  // namespace

TEST_CASE("linear fit recovers an exact line") {
  const std::vector<double> x{100.0, 200.0, 400.0};
  const std::vector<double> y{24.05, 48.10, 96.20};
  const LinearFit f = linear_fit(x, y);
  CHECK(f.slope == doctest::Approx(0.2405).epsilon(1e-12));
  CHECK(std::abs(f.intercept) < 1e-10);
  CHECK(f.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("linear fit validation") {
  CHECK_THROWS_AS(linear_fit({1.0}, {2.0}), std::invalid_argument);
  CHECK_THROWS_AS(linear_fit({1.0, 1.0}, {2.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(linear_fit({1.0, 2.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("onset detector finds a departure from a flat baseline") {
  const auto t = linspace(0.0, 100.0, 1001);
  std::vector<double> signal(t.size(), 0.5);
  // Deterministic sub-threshold ripple in the baseline region.
  for (std::size_t i = 0; i < t.size(); ++i)
    signal[i] += 1e-6 * std::sin(0.37 * t[i]);
  // Clear departure starting at t = 70.
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] > 70.0) signal[i] += 0.05 * (t[i] - 70.0);

  const auto onset = detect_onset(t, signal);
  REQUIRE(onset.has_value());
  CHECK(*onset > 70.0);
  CHECK(*onset < 75.0);
}

TEST_CASE("onset detector stays quiet on a baseline-only signal") {
  const auto t = linspace(0.0, 100.0, 1001);
  const std::vector<double> flat(t.size(), 0.3);
  CHECK_FALSE(detect_onset(t, flat).has_value());

  std::vector<double> ripple(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    ripple[i] = 0.3 + 1e-6 * std::sin(0.37 * t[i]);
  CHECK_FALSE(detect_onset(t, ripple).has_value());
}

TEST_CASE("onset detector ignores the early transient") {
  // A large excursion before the baseline window must not trigger.
  const auto t = linspace(0.0, 100.0, 1001);
  std::vector<double> signal(t.size(), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < 10.0) signal[i] = std::exp(-t[i]);
  CHECK_FALSE(detect_onset(t, signal).has_value());
}

TEST_CASE("separation detector discounts a static offset") {
  const auto t = linspace(0.0, 100.0, 1001);
  std::vector<double> a(t.size()), b(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    a[i] = 0.5;
    b[i] = 0.5 + 0.01;  // constant finite-size offset, no true separation
  }
  CHECK_FALSE(detect_separation(t, a, b).has_value());

  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] > 60.0) b[i] += 0.05 * (t[i] - 60.0);
  const auto onset = detect_separation(t, a, b);
  REQUIRE(onset.has_value());
  CHECK(*onset > 60.0);
  CHECK(*onset < 66.0);
}

TEST_CASE("detector input validation") {
  const auto t = linspace(0.0, 10.0, 11);
  CHECK_THROWS_AS(detect_onset(t, std::vector<double>(5, 0.0)),
                  std::invalid_argument);
  DetectionConfig narrow;
  narrow.relax_fraction = 0.5;
  narrow.window_fraction = 0.5001;
  CHECK_THROWS_AS(detect_onset(t, std::vector<double>(11, 0.0), narrow),
                  std::invalid_argument);
}

TEST_CASE("critical-field locator") {
  const std::vector<double> h1{0.8, 0.9, 1.0, 1.1, 1.2};
  const CriticalPoint cp =
      locate_critical_field(h1, {0.1, 0.4, 0.9, 0.5, 0.2});
  CHECK(cp.h1 == 1.0);
  CHECK(cp.value == 0.9);
  CHECK_FALSE(cp.degenerate);

  const CriticalPoint tie =
      locate_critical_field(h1, {0.1, 0.9, 0.4, 0.9, 0.2});
  CHECK(tie.h1 == 0.9);
  CHECK(tie.degenerate);

  CHECK_THROWS_AS(locate_critical_field({}, {}), std::invalid_argument);
}

TEST_CASE("relaxed scan equals the per-column plateau") {
  const auto params = make_params(16, 1.0, 1.0, 1.0, 0.7, 1.0, 0.0);
  const Axis1D h1_axis = make_axis(0.5, 1.5, 5);
  const auto scan = relaxed_scan(params, h1_axis);
  const auto scan_mt = relaxed_scan(params, h1_axis, 4);
  REQUIRE(static_cast<int>(scan.size()) == h1_axis.count);
  for (int i = 0; i < h1_axis.count; ++i) {
    ModelParams p = params;
    p.h1 = h1_axis.value(i);
    const MeasureSet direct = evaluate_measures(relaxed_observables(p));
    CHECK(scan[i].lqc_x == direct.lqc_x);
    CHECK(scan[i].rec == direct.rec);
    CHECK(scan_mt[i].lqc_x == direct.lqc_x);
  }
}
