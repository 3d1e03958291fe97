#pragma once

// Flat-file output: CSV tables with a '#'-prefixed header line, and a
// minimal SVG line chart.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace corrwork {

/// Empty cell, integer, real or bare word (no commas, quotes or line breaks).
using CsvCell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<CsvCell>> rows;

  bool operator==(const CsvTable&) const = default;
};

/// Reals are written with 12 significant digits and always carry a '.', 'e',
/// "nan" or "inf" so that they parse back as reals.
std::string format_real(double x);
/// The value format_real(x) parses back to.
double round_to_csv_precision(double x);

std::string emit_csv(const CsvTable& table);
/// Throws ValidityError on a missing header or a ragged row.
CsvTable parse_csv(std::string_view text);

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotLabels {
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Self-contained SVG document with one polyline per series and a legend.
std::string svg_line_plot(const std::vector<PlotSeries>& series, const PlotLabels& labels);

/// Writes `content` to `path`; throws FileError naming the path on failure.
void write_text_file(const std::string& path, std::string_view content);

}  // namespace corrwork
