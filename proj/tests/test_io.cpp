#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "xychain/config.hpp"
#include "xychain/table.hpp"

using namespace xychain;

namespace {

const char* kCompleteConfig =
    "# reference run\n"
    "N = 8\n"
    "gamma = 1.0\n"
    "J0 = 1.0\n"
    "J1 = 1.0\n"
    "h0 = 0.7\n"
    "h1 = 1.0\n"
    "T = 0\n";

bool has_error_containing(const ConfigResult& r, const std::string& needle) {
  for (const auto& e : r.errors)
    if (e.find(needle) != std::string::npos) return true;
  return false;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / "xychain_test_io";
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("complete config parses") {
  const ConfigResult r = parse_config(kCompleteConfig);
  REQUIRE(r.ok());
  CHECK(r.config->params.n_sites == 8);
  CHECK(r.config->params.h0 == 0.7);
  CHECK(r.config->rec_base == 2.0);
  CHECK(r.config->sizes.size() == 6);
}

TEST_CASE("non-integer N is reported with the expected message") {
  const ConfigResult r = parse_config("N = 8.5\ngamma = 1\nJ0 = 1\nJ1 = 1\n"
                                      "h0 = 0.7\nh1 = 1\nT = 0\n");
  CHECK_FALSE(r.ok());
  CHECK(has_error_containing(r, "N: expected even integer"));
}

TEST_CASE("empty config lists every required key") {
  const ConfigResult r = parse_config("");
  CHECK_FALSE(r.ok());
  for (const char* key : {"N", "gamma", "J0", "J1", "h0", "h1", "T"})
    CHECK(has_error_containing(r, std::string("`") + key + "`"));
}

TEST_CASE("unknown and duplicate keys are rejected") {
  const ConfigResult unknown =
      parse_config(std::string(kCompleteConfig) + "beta = 3\n");
  CHECK_FALSE(unknown.ok());
  CHECK(has_error_containing(unknown, "unknown key `beta`"));

  const ConfigResult dup =
      parse_config(std::string(kCompleteConfig) + "N = 10\n");
  CHECK_FALSE(dup.ok());
  CHECK(has_error_containing(dup, "duplicate key `N`"));
}

TEST_CASE("errors are aggregated, not first-error-only") {
  const ConfigResult r = parse_config("N = 7\ngamma = x\n");
  CHECK_FALSE(r.ok());
  CHECK(r.errors.size() >= 3);  // bad N, bad gamma, several missing keys
}

TEST_CASE("overrides replace config values") {
  KeyValueMap map;
  parse_raw(kCompleteConfig, map);
  CHECK_FALSE(apply_override(map, "h1=1.5").has_value());
  CHECK(apply_override(map, "nonsense").has_value());
  const ConfigResult r = build_config(map);
  REQUIRE(r.ok());
  CHECK(r.config->params.h1 == 1.5);
}

TEST_CASE("sizes list parsing") {
  const ConfigResult r =
      parse_config(std::string(kCompleteConfig) + "sizes = 100, 200, 300\n");
  REQUIRE(r.ok());
  CHECK(r.config->sizes == std::vector<int>{100, 200, 300});

  const ConfigResult bad =
      parse_config(std::string(kCompleteConfig) + "sizes = 100, 0\n");
  CHECK_FALSE(bad.ok());
}

TEST_CASE("measure column selection") {
  CHECK(default_columns().size() == 6);
  const auto cols = select_columns("rec,qfi");
  REQUIRE(cols.size() == 2);
  CHECK(cols[0].name == "rec");
  CHECK(cols[1].name == "qfi");
  CHECK_THROWS_AS(select_columns("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(select_columns(""), std::invalid_argument);
}

TEST_CASE("series table round-trips bitwise and is byte-stable") {
  TempDir tmp;
  const auto params = make_params(8, 1.0, 1.0, 1.0, 0.7, 1.0, 0.0);
  const Axis1D axis = make_axis(0.0, 2.0, 9);
  const SeriesResult series = evolve_series(params, axis);
  const auto columns = default_columns();

  const std::string path = tmp.file("series.csv");
  write_series_table(series, columns, path);
  const ParsedTable table = read_table(path);

  REQUIRE(table.header.size() == 7);
  CHECK(table.header[0] == "t");
  REQUIRE(static_cast<int>(table.rows.size()) == axis.count);
  for (int i = 0; i < axis.count; ++i) {
    CHECK(table.rows[i][0] == axis.value(i));
    CHECK(table.rows[i][1] == series.cells[i].cl1);
    CHECK(table.rows[i][2] == series.cells[i].rec);
    CHECK(table.rows[i][6] == series.cells[i].qfi);
  }
  CHECK_FALSE(table.preamble.empty());

  const std::string again = tmp.file("series2.csv");
  write_series_table(series, columns, again);
  CHECK(read_file(path) == read_file(again));

  // LF line endings only.
  CHECK(read_file(path).find('\r') == std::string::npos);
}

TEST_CASE("map table has one row per cell in row-major order") {
  TempDir tmp;
  const auto params = make_params(16, 1.0, 1.0, 1.0, 0.7, 1.0, 0.0);
  const MapResult map = field_map(params, make_axis(0.0, 1.0, 2),
                                  make_axis(0.5, 1.5, 2));
  const std::string path = tmp.file("map.csv");
  write_map_table(map, default_columns(), path);
  const ParsedTable table = read_table(path);
  REQUIRE(table.rows.size() == 4);
  CHECK(table.header[0] == "t");
  CHECK(table.header[1] == "h1");
  // Row-major: h1 varies fastest.
  CHECK(table.rows[0][1] == 0.5);
  CHECK(table.rows[1][1] == 1.5);
  CHECK(table.rows[0][0] == table.rows[1][0]);
  CHECK(table.rows[2][0] == 1.0);
}

TEST_CASE("write failures carry the path") {
  const auto params = make_params(8, 1.0, 1.0, 1.0, 0.7, 1.0, 0.0);
  const SeriesResult series = evolve_series(params, make_axis(0.0, 1.0, 2));
  CHECK_THROWS_WITH_AS(
      write_series_table(series, default_columns(), "/nonexistent/dir/x.csv"),
      doctest::Contains("/nonexistent/dir/x.csv"), std::runtime_error);
}
