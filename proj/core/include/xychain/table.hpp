// Plot-ready CSV serialization of sweep results.
//
// Format: `#`-prefixed metadata preamble (params, grid, version, grid hash),
// then a header row naming axes and measures, then one row per grid cell in
// row-major axis order. Values use 17 significant digits so a re-parse is
// bitwise exact. UTF-8, LF line endings, byte-identical across reruns.
#pragma once

#include <string>
#include <vector>

#include "xychain/sweep.hpp"

namespace xychain {

/// One named output column drawn from a MeasureSet.
struct MeasureColumn {
  std::string name;
  double MeasureSet::* field;
  double scale = 1.0;  ///< applied on write (e.g. entropy base changes)
};

/// All six measures in canonical order: cl1, rec, lqcx, lqcy, lqcz, qfi.
std::vector<MeasureColumn> default_columns();

/// Subset selection from a comma-separated list of canonical names.
/// Throws std::invalid_argument on an unknown name or empty selection.
std::vector<MeasureColumn> select_columns(const std::string& csv_names);

/// Time-series table: column `t` plus the selected measures.
/// Throws std::runtime_error naming the path on I/O failure.
void write_series_table(const SeriesResult& result,
                        const std::vector<MeasureColumn>& columns,
                        const std::string& path);

/// Map table: columns `t`, `h1` plus the selected measures, rows in
/// row-major (t, h1) order.
void write_map_table(const MapResult& result,
                     const std::vector<MeasureColumn>& columns,
                     const std::string& path);

/// Generic table: caller-provided header and rows, with a caller-provided
/// preamble (each line written with a `# ` prefix). Used for scan summaries.
void write_generic_table(const std::vector<std::string>& preamble,
                         const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows,
                         const std::string& path);

/// Parsed-back table for round-trip verification.
struct ParsedTable {
  std::vector<std::string> preamble;  ///< `#` lines without the prefix
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Reads a table written by the writers above.
/// Throws std::runtime_error naming the path on I/O or format errors.
ParsedTable read_table(const std::string& path);

/// 17-significant-digit decimal rendering used for every value.
std::string format_value(double v);

}  // namespace xychain
