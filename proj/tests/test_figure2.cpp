#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "waylab/catalog.hpp"
#include "waylab/error.hpp"
#include "waylab/way.hpp"

using namespace waylab;

TEST(Figure2, UAlphaIsUnitaryAndEndpoints) {
  for (double a : {0.0, 0.3, 0.6, 1.0}) EXPECT_TRUE(is_unitary(u_alpha(a)));
  const auto z0 = ComplexMatrix::diagonal(std::vector<Complex>{1.0, 0.0});
  const auto z1 = ComplexMatrix::diagonal(std::vector<Complex>{0.0, 1.0});
  const auto d = ComplexMatrix::diagonal(std::vector<Complex>{1.0, Complex(0, 1)});
  EXPECT_LE(max_abs_diff(u_alpha(1.0), oracle::kron(pauli_z(), z0) + oracle::kron(d, z1)), 1e-15);
  EXPECT_THROW(u_alpha(1.1), Error);
  EXPECT_THROW(u_alpha(-0.1), Error);
}

TEST(Figure2, ObjectiveMatchesBlockFormula) {
  for (double a : {0.6, 0.75, 0.9, 1.0})
    for (double t = 0.0; t <= 3.2; t += 0.4)
      for (double p = 0.0; p <= 6.3; p += 0.7) {
        const std::array<double, 3> n{std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
        EXPECT_NEAR(figure2_objective(a, n), oracle::figure2_block_objective(a, n), 1e-10);
      }
}

TEST(Figure2, OracleAgreesWithAnalyticMinimax) {
  for (double a : {0.6, 0.8, 0.95, 1.0})
    EXPECT_NEAR(oracle::figure2_grid_minimum(a).value, oracle::figure2_analytic_minimum(a), 1e-7);
}

TEST(Figure2, MinimizerAgreesWithOracle) {
  for (double a : {0.6, 0.7, 0.85, 1.0}) {
    const auto p = minimize_figure2(a);
    EXPECT_NEAR(p.min_bound, oracle::figure2_analytic_minimum(a), 1e-6);
    EXPECT_GE(p.direction[2], 0.0);
    EXPECT_NEAR(figure2_objective(a, p.direction), p.min_bound, 1e-12);
  }
  const auto at_one = minimize_figure2(1.0);
  EXPECT_LE(at_one.min_bound, 1e-9);
  EXPECT_GE(at_one.direction[2], 1.0 - 1e-6);
}

TEST(Figure2, ScanIsMonotone) {
  const auto pts = figure2_scan(linear_grid(0.6, 1.0, 9));
  ASSERT_EQ(pts.size(), 9u);
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LE(pts[i].min_bound, pts[i - 1].min_bound + 1e-9);
}

TEST(Figure2, LinearGrid) {
  const auto g = linear_grid(0.6, 1.0, 81);
  ASSERT_EQ(g.size(), 81u);
  EXPECT_DOUBLE_EQ(g.front(), 0.6);
  EXPECT_DOUBLE_EQ(g.back(), 1.0);
  EXPECT_EQ(linear_grid(0.3, 1.0, 1).size(), 1u);
}

TEST(Figure2, RegionsNest) {
  const auto big = realisable_effect_region(0.8, 101), small = realisable_effect_region(0.95, 101);
  EXPECT_GE(big.points.size(), small.points.size());
  for (const auto& p : small.points)
    EXPECT_NE(std::find(big.points.begin(), big.points.end(), p), big.points.end());
  const auto line = realisable_effect_region(1.0, 101);
  for (const auto& [x, z] : line.points) EXPECT_LE(std::abs(x), 1e-12);
}
