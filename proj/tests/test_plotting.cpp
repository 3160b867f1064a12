#include <gtest/gtest.h>

#include "waylab/error.hpp"
#include "waylab/plotting.hpp"
#include "waylab/report.hpp"

using namespace waylab;

TEST(Plotting, ScanRoundTrip) {
  const auto pts = figure2_scan(linear_grid(0.6, 1.0, 5));
  const auto csv = report::scan_csv(pts);
  const auto s = plot::parse_scan_csv(csv);
  ASSERT_EQ(s.alpha.size(), 5u);
  EXPECT_DOUBLE_EQ(s.min_bound.back(), pts.back().min_bound);
  const auto svg = plot::render_svg(csv);
  EXPECT_EQ(svg, plot::render_scan_svg(s));
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_EQ(svg, plot::render_svg(csv));
}

TEST(Plotting, RegionRoundTrip) {
  const auto region = realisable_effect_region(0.9, 41);
  const auto csv = report::region_csv(region);
  const auto r = plot::parse_region_csv(csv);
  EXPECT_EQ(r.points.size(), region.points.size());
  ASSERT_TRUE(r.alpha.has_value());
  EXPECT_DOUBLE_EQ(*r.alpha, 0.9);
  const auto svg = plot::render_svg(csv);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  EXPECT_EQ(svg, plot::render_svg(csv));
}

TEST(Plotting, RegionWithoutAxisUsesCloud) {
  const auto svg = plot::render_region_svg(plot::RegionCloud{{}, {}, {}, {{-0.5, -0.5}, {0.0, 0.0}, {0.5, 0.5}}});
  EXPECT_NE(svg.find("<line"), std::string::npos);
}

TEST(Plotting, MalformedCsvNamesLine) {
  try {
    plot::parse_scan_csv("alpha,min_bound,nx,ny,nz\n0.6,1,0,0,1\n0.7,oops,0,0,1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedCsv);
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
  EXPECT_THROW(plot::render_svg("what,is,this\n"), Error);
}
