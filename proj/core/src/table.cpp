#include "xychain/table.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "xychain/version.hpp"

namespace xychain {

namespace {

std::vector<std::string> param_preamble(const ModelParams& p) {
  std::vector<std::string> lines;
  lines.push_back(std::string("xychain v") + kVersion);
  lines.push_back("N = " + std::to_string(p.n_sites));
  lines.push_back("gamma = " + format_value(p.gamma));
  lines.push_back("J0 = " + format_value(p.j0));
  lines.push_back("J1 = " + format_value(p.j1));
  lines.push_back("h0 = " + format_value(p.h0));
  lines.push_back("T = " + format_value(p.temperature));
  return lines;
}

std::string axis_line(const char* name, const Axis1D& axis) {
  return std::string(name) + " axis: " + format_value(axis.lo) + " .. " +
         format_value(axis.hi) + ", " + std::to_string(axis.count) +
         " points";
}

std::string hash_line(std::uint64_t hash) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "grid hash: %016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

void write_lines(const std::vector<std::string>& preamble,
                 const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows,
                 const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& line : preamble) out << "# " << line << '\n';
  for (std::size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_value(row[i]);
    out << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<MeasureColumn> default_columns() {
  return {{"cl1", &MeasureSet::cl1},   {"rec", &MeasureSet::rec},
          {"lqcx", &MeasureSet::lqc_x}, {"lqcy", &MeasureSet::lqc_y},
          {"lqcz", &MeasureSet::lqc_z}, {"qfi", &MeasureSet::qfi}};
}

std::vector<MeasureColumn> select_columns(const std::string& csv_names) {
  const auto all = default_columns();
  std::vector<MeasureColumn> out;
  std::istringstream parts(csv_names);
  std::string token;
  while (std::getline(parts, token, ',')) {
    bool found = false;
    for (const auto& col : all)
      if (col.name == token) {
        out.push_back(col);
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument("unknown measure `" + token + "`");
  }
  if (out.empty()) throw std::invalid_argument("empty measure selection");
  return out;
}

void write_series_table(const SeriesResult& result,
                        const std::vector<MeasureColumn>& columns,
                        const std::string& path) {
  auto preamble = param_preamble(result.params);
  preamble.insert(preamble.begin() + 6,
                  "h1 = " + format_value(result.params.h1));
  preamble.push_back(axis_line("t", result.t_axis));
  preamble.push_back(hash_line(grid_hash(result.params, result.t_axis)));

  std::vector<std::string> header{"t"};
  for (const auto& col : columns) header.push_back(col.name);

  std::vector<std::vector<double>> rows;
  rows.reserve(result.cells.size());
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    std::vector<double> row{result.t_axis.value(static_cast<int>(i))};
    for (const auto& col : columns)
      row.push_back(col.scale * (result.cells[i].*(col.field)));
    rows.push_back(std::move(row));
  }
  write_lines(preamble, header, rows, path);
}

void write_map_table(const MapResult& result,
                     const std::vector<MeasureColumn>& columns,
                     const std::string& path) {
  auto preamble = param_preamble(result.params);
  preamble.push_back(axis_line("t", result.t_axis));
  preamble.push_back(axis_line("h1", result.h1_axis));
  preamble.push_back(
      hash_line(grid_hash(result.params, result.t_axis, &result.h1_axis)));

  std::vector<std::string> header{"t", "h1"};
  for (const auto& col : columns) header.push_back(col.name);

  std::vector<std::vector<double>> rows;
  rows.reserve(result.cells.size());
  for (int it = 0; it < result.t_axis.count; ++it)
    for (int ih = 0; ih < result.h1_axis.count; ++ih) {
      std::vector<double> row{result.t_axis.value(it),
                              result.h1_axis.value(ih)};
      const MeasureSet& m = result.at(it, ih);
      for (const auto& col : columns)
        row.push_back(col.scale * (m.*(col.field)));
      rows.push_back(std::move(row));
    }
  write_lines(preamble, header, rows, path);
}

void write_generic_table(const std::vector<std::string>& preamble,
                         const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows,
                         const std::string& path) {
  write_lines(preamble, header, rows, path);
}

ParsedTable read_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  ParsedTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
      table.preamble.push_back(line.substr(start));
      continue;
    }
    std::istringstream parts(line);
    std::string token;
    if (!have_header) {
      while (std::getline(parts, token, ',')) table.header.push_back(token);
      have_header = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(parts, token, ',')) {
      try {
        row.push_back(std::stod(token));
      } catch (const std::exception&) {
        throw std::runtime_error(path + ": bad value `" + token + "`");
      }
    }
    if (row.size() != table.header.size())
      throw std::runtime_error(path + ": row width mismatch");
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error(path + ": missing header row");
  return table;
}

}  // namespace xychain
