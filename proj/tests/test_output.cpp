#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "corrwork/core.hpp"
#include "corrwork/output.hpp"

using namespace corrwork;

TEST_CASE("format_real") {
  CHECK(format_real(1.0) == "1.0");
  CHECK(format_real(-3.0) == "-3.0");
  CHECK(format_real(0.25) == "0.25");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(1e-20) == "1e-20");
  CHECK(format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_real(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(round_to_csv_precision(1.0 / 3.0) == std::stod("0.333333333333"));
}

TEST_CASE("csv emit") {
  CsvTable t{{"family", "n", "value", "note"}, {{std::string("phi"), std::int64_t{3}, 0.5, std::monostate{}}}};
  CHECK(emit_csv(t) == "#family,n,value,note\nphi,3,0.5,\n");
  t.rows[0][0] = std::string("a,b");
  CHECK_THROWS_AS(emit_csv(t), ValidityError);
  t.rows[0][0] = std::string("#x");
  CHECK_THROWS_AS(emit_csv(t), ValidityError);
}

TEST_CASE("csv round trip") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    CsvTable t{{"a", "b", "c", "d"}, {}};
    for (int r = 0; r < 20; ++r) {
      const double x = round_to_csv_precision(std::exp(g(rng)) * (r % 2 ? -1 : 1));
      t.rows.push_back({std::int64_t{r - 10}, x, std::string(r % 3 ? "ok" : "infeasible"),
                        r % 4 ? CsvCell{round_to_csv_precision(g(rng))} : CsvCell{}});
    }
    const auto text = emit_csv(t);
    const auto back = parse_csv(text);
    CHECK(back == t);
    CHECK(emit_csv(back) == text);
  }
  const auto special = parse_csv("#x\nnan\ninf\n-inf\n");
  CHECK(std::isnan(std::get<double>(special.rows[0][0])));
  CHECK(std::get<double>(special.rows[1][0]) == std::numeric_limits<double>::infinity());
}

TEST_CASE("csv parse errors") {
  CHECK_THROWS_AS(parse_csv(""), ValidityError);
  CHECK_THROWS_AS(parse_csv("a,b\n1,2\n"), ValidityError);
  CHECK_THROWS_AS(parse_csv("#a,b\n1\n"), ValidityError);
  CHECK_THROWS_AS(parse_csv("#a,b\n1,2,3\n"), ValidityError);
  const auto ok = parse_csv("#a,b\n1,2.0\n");
  CHECK(std::get<std::int64_t>(ok.rows[0][0]) == 1);
  CHECK(std::get<double>(ok.rows[0][1]) == 2.0);
}

TEST_CASE("svg plot") {
  const auto svg = svg_line_plot({{"one", {1, 2, 3}, {0.1, 0.5, 0.9}}, {"two", {1, 2, 3}, {0.2, 0.3, 0.4}}},
                                 {"title", "n", "ratio"});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t count = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++count;
  CHECK(count == 2);
  CHECK(svg.find("two") != std::string::npos);
}

TEST_CASE("write_text_file") {
  const auto dir = std::filesystem::temp_directory_path() / "corrwork_output_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "x.csv").string();
  write_text_file(path, "#a\n1\n");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "#a\n1\n");
  std::filesystem::remove_all(dir);
  try {
    write_text_file("/nonexistent-dir/sub/x.csv", "x");
    FAIL("expected FileError");
  } catch (const FileError& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/sub/x.csv") != std::string::npos);
  }
}
