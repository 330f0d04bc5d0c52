// Deterministic parallel evaluation of the measures over structured grids.
//
// Every cell is a pure function of (params, t); workers write results by
// grid index, so the assembled output is bitwise identical for any thread
// count.
#pragma once

#include <cstdint>
#include <vector>

#include "xychain/measures.hpp"
#include "xychain/model.hpp"

namespace xychain {

/// Uniform closed axis [lo, hi] with count points (count >= 2).
struct Axis1D {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;

  double value(int i) const {
    return count < 2 ? lo : lo + (hi - lo) * i / (count - 1);
  }
};

/// Validates count >= 2 and lo < hi; throws std::invalid_argument.
Axis1D make_axis(double lo, double hi, int count);

/// Axis with spacing at most max_step.
Axis1D make_axis_step(double lo, double hi, double max_step);

struct SeriesResult {
  ModelParams params;
  Axis1D t_axis;
  std::vector<MeasureSet> cells;  ///< one per time point

  std::vector<double> column(double MeasureSet::* field) const;
};

struct MapResult {
  ModelParams params;  ///< h1 overridden per column
  Axis1D t_axis;
  Axis1D h1_axis;
  /// Row-major over (t, h1): cells[it * h1_axis.count + ih].
  std::vector<MeasureSet> cells;

  const MeasureSet& at(int it, int ih) const {
    return cells[static_cast<std::size_t>(it) * h1_axis.count + ih];
  }
};

/// Measures along a time axis. threads affects speed only, never values.
SeriesResult evolve_series(const ModelParams& params, const Axis1D& t_axis,
                           int threads = 1);

/// Measures over (t, h1); column ih uses params with h1 = h1_axis.value(ih).
MapResult field_map(const ModelParams& params, const Axis1D& t_axis,
                    const Axis1D& h1_axis, int threads = 1);

/// One evolve_series per system size over a shared time axis.
/// Throws std::invalid_argument on an empty size list.
std::vector<SeriesResult> size_family(const ModelParams& params,
                                      const std::vector<int>& sizes,
                                      const Axis1D& t_axis, int threads = 1);

/// FNV-1a hash of the grid definition, recorded in output metadata.
std::uint64_t grid_hash(const ModelParams& params, const Axis1D& t_axis,
                        const Axis1D* h1_axis = nullptr);

}  // namespace xychain
