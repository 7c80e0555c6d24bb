#ifndef PHASELAG_ARTIFACTS_HPP
#define PHASELAG_ARTIFACTS_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace phaselag {

/// Shortest round-trip decimal form ("%.17g"), so CSV output is bit-exact.
std::string format_double(double v);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws std::invalid_argument if absent.
  std::size_t column(const std::string& name) const;
  std::vector<double> values(const std::string& name) const;
};

std::string to_csv(const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  bool markers = false;  ///< circles instead of a polyline
};

struct PlotAxes {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

/**
 * Static line plot with a fixed 640×400 viewBox. The output depends only on
 * the input (no timestamps, fixed number formatting), so identical series
 * produce byte-identical files. Throws std::invalid_argument for an empty
 * series set, a series with fewer than 2 points, or non-positive values on a
 * log axis.
 */
std::string emit_svg(const std::vector<PlotSeries>& series, const PlotAxes& axes);

}  // namespace phaselag

#endif  // PHASELAG_ARTIFACTS_HPP
