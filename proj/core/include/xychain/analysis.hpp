// Post-processing of measure series: finite-size revival and separation
// onsets, the linear scaling fit of onset time versus chain length, and the
// critical-field locator over an h1 scan.
#pragma once

#include <optional>
#include <vector>

#include "xychain/sweep.hpp"

namespace xychain {

/// Onset detector tuning. The baseline window [relax_fraction, window_fraction]
/// (as fractions of the final time) must sit after the initial relaxation
/// transient and before the earliest onset being measured.
struct DetectionConfig {
  double relax_fraction = 0.15;   ///< baseline window start
  double window_fraction = 0.4;   ///< baseline window end / search start
  double threshold_k = 5.0;       ///< sigma multiplier
  double peak_fraction = 0.1;     ///< floor as a fraction of the peak deviation
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

struct CriticalPoint {
  double h1 = 0.0;
  double value = 0.0;
  bool degenerate = false;  ///< another scan point ties the maximum
};

/// First time after the baseline window where |signal - baseline mean|
/// exceeds max(k * baseline sigma, peak_fraction * max deviation in the
/// search region). Returns nullopt when the signal never leaves baseline.
/// Throws std::invalid_argument on mismatched lengths or an empty baseline.
std::optional<double> detect_onset(const std::vector<double>& t,
                                   const std::vector<double>& signal,
                                   const DetectionConfig& config = {});

/// Revival onset of one measure column (alias for detect_onset; the revival
/// signal is the series itself measured against its relaxed plateau).
std::optional<double> detect_revival(const std::vector<double>& t,
                                     const std::vector<double>& signal,
                                     const DetectionConfig& config = {});

/// Onset of finite-size separation: detect_onset applied to |a - b|, which
/// discounts the static finite-size offset between the two chains.
std::optional<double> detect_separation(const std::vector<double>& t,
                                        const std::vector<double>& a,
                                        const std::vector<double>& b,
                                        const DetectionConfig& config = {});

/// Ordinary least squares y = slope * x + intercept with the coefficient of
/// determination. Throws std::invalid_argument for fewer than 2 points or a
/// degenerate x range.
LinearFit linear_fit(const std::vector<double>& x,
                     const std::vector<double>& y);

/// Maximum of a scanned statistic over h1. Ties (within tie_eps relative to
/// the maximum) keep the smallest h1 and set the degenerate flag.
CriticalPoint locate_critical_field(const std::vector<double>& h1,
                                    const std::vector<double>& statistic,
                                    double tie_eps = 1e-12);

/// Long-time plateau value of every measure along an h1 scan: the column
/// statistic used by the critical-field locator. One entry per axis point.
std::vector<MeasureSet> relaxed_scan(const ModelParams& params,
                                     const Axis1D& h1_axis, int threads = 1);

}  // namespace xychain
