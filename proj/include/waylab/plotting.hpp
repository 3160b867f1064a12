#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace waylab::plot {

struct ScanSeries {
  std::vector<double> alpha;
  std::vector<double> min_bound;
};

struct RegionCloud {
  std::optional<double> alpha;
  std::optional<double> min_bound;
  std::optional<std::array<double, 3>> axis;
  std::vector<std::pair<double, double>> points;  // (x, z)
};

/// Throw MalformedCsv with the line number.
ScanSeries parse_scan_csv(std::string_view text);
RegionCloud parse_region_csv(std::string_view text);

std::string render_scan_svg(const ScanSeries& s);
/// Without an axis the principal direction of the point cloud is drawn.
std::string render_region_svg(const RegionCloud& r);

/// Picks the renderer from the CSV header.
std::string render_svg(std::string_view csv);

}  // namespace waylab::plot
