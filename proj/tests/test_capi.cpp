#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "json.hpp"
#include "waylab/waylab.h"

namespace {

std::string take(waylab_string* s) {
  std::string out(waylab_string_data(s), waylab_string_size(s));
  waylab_string_destroy(s);
  return out;
}

const char* kCzModel = R"({
  "system_dim": 2, "apparatus_dim": 2,
  "pointer": {"dim": 2, "outcomes": ["+", "-"],
              "effects": [[[0.5, 0.5], [0.5, 0.5]], [[0.5, -0.5], [-0.5, 0.5]]]},
  "coupling": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
  "probe": [0.7071067811865476, 0.7071067811865476]
})";

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(waylab_version(), "0.1.0");
  EXPECT_STREQ(waylab_status_name(WAYLAB_OK), "ok");
  EXPECT_NE(std::string(waylab_status_name(WAYLAB_ERR_SCHEMA)), "");
}

TEST(CApi, ContextTolerance) {
  waylab_context* ctx = nullptr;
  ASSERT_EQ(waylab_context_create(&ctx), WAYLAB_OK);
  EXPECT_DOUBLE_EQ(waylab_context_tolerance(ctx), 1e-10);
  EXPECT_EQ(waylab_context_set_tolerance(ctx, 1e-6), WAYLAB_OK);
  EXPECT_EQ(waylab_context_set_tolerance(ctx, -1.0), WAYLAB_ERR_BAD_PARAMS);
  EXPECT_DOUBLE_EQ(waylab_context_tolerance(ctx), 1e-6);
  waylab_context_destroy(ctx);
}

TEST(CApi, MatrixOperations) {
  const double x[] = {0, 0, 1, 0, 1, 0, 0, 0};
  const double z[] = {1, 0, 0, 0, 0, 0, -1, 0};
  waylab_matrix *mx = nullptr, *mz = nullptr;
  ASSERT_EQ(waylab_matrix_create(2, 2, x, &mx), WAYLAB_OK);
  ASSERT_EQ(waylab_matrix_create(2, 2, z, &mz), WAYLAB_OK);
  double n = 0.0;
  ASSERT_EQ(waylab_matrix_commutator_norm(mx, mz, &n), WAYLAB_OK);
  EXPECT_NEAR(n, 2.0, 1e-14);
  ASSERT_EQ(waylab_matrix_operator_norm(mx, &n), WAYLAB_OK);
  EXPECT_NEAR(n, 1.0, 1e-14);
  int unitary = 0;
  ASSERT_EQ(waylab_matrix_is_unitary(nullptr, mx, &unitary), WAYLAB_OK);
  EXPECT_EQ(unitary, 1);
  double re = 0, im = 0;
  EXPECT_EQ(waylab_matrix_get(mx, 5, 0, &re, &im), WAYLAB_ERR_DIMENSION_MISMATCH);
  waylab_matrix_destroy(mx);
  waylab_matrix_destroy(mz);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(waylab_matrix_create(2, 2, nullptr, nullptr), WAYLAB_ERR_NULL_ARGUMENT);
  EXPECT_EQ(waylab_catalog_index(nullptr), WAYLAB_ERR_NULL_ARGUMENT);
  EXPECT_NE(std::string(waylab_last_error()), "");
}

TEST(CApi, CatalogUnitary) {
  waylab_matrix* u = nullptr;
  ASSERT_EQ(waylab_catalog_unitary("u-alpha", R"({"alpha": 0.6})", &u), WAYLAB_OK);
  EXPECT_EQ(waylab_matrix_rows(u), 4u);
  double re = 0, im = 0;
  ASSERT_EQ(waylab_matrix_get(u, 0, 0, &re, &im), WAYLAB_OK);
  EXPECT_NEAR(re, 0.6, 1e-15);
  waylab_matrix_destroy(u);
  EXPECT_EQ(waylab_catalog_unitary("nope", nullptr, &u), WAYLAB_ERR_UNKNOWN_ID);
  EXPECT_EQ(waylab_catalog_unitary("u-alpha", R"({"alpha": 2})", &u), WAYLAB_ERR_BAD_PARAMS);
  EXPECT_EQ(waylab_catalog_unitary("ex4-measurement", nullptr, &u), WAYLAB_ERR_BAD_PARAMS);
}

TEST(CApi, MeasurementHandle) {
  waylab_measurement* m = nullptr;
  ASSERT_EQ(waylab_measurement_from_json(nullptr, kCzModel, &m), WAYLAB_OK) << waylab_last_error();
  double sd = 1.0;
  ASSERT_EQ(waylab_measurement_sharpness_defect(m, &sd), WAYLAB_OK);
  EXPECT_LE(sd, 1e-10);
  int rep = 0;
  ASSERT_EQ(waylab_measurement_is_repeatable(nullptr, m, &rep), WAYLAB_OK);
  EXPECT_EQ(rep, 1);
  waylab_string* s = nullptr;
  ASSERT_EQ(waylab_measurement_observable_json(m, &s), WAYLAB_OK);
  EXPECT_NE(take(s).find("effects"), std::string::npos);
  ASSERT_EQ(waylab_measurement_to_json(m, &s), WAYLAB_OK);
  EXPECT_NE(take(s).find("probe"), std::string::npos);
  waylab_measurement_destroy(m);
  EXPECT_EQ(waylab_measurement_from_json(nullptr, "{", &m), WAYLAB_ERR_SCHEMA);
}

TEST(CApi, MultimeterProgram) {
  waylab_string* s = nullptr;
  int passed = 0;
  ASSERT_EQ(waylab_example_report(nullptr, "ex5-multimeter", nullptr, &s, &passed), WAYLAB_OK);
  EXPECT_EQ(passed, 1);
  const auto object = nlohmann::json::parse(take(s))["object"].dump();
  waylab_multimeter* mm = nullptr;
  ASSERT_EQ(waylab_multimeter_from_json(nullptr, object.c_str(), &mm), WAYLAB_OK) << waylab_last_error();
  const double one[] = {0, 0, 1, 0};
  ASSERT_EQ(waylab_multimeter_program_json(mm, one, 2, &s), WAYLAB_OK);
  const auto program = nlohmann::json::parse(take(s));
  EXPECT_NEAR(program["effects"][0][0][1][0].get<double>(), 0.5, 1e-12);
  const double bad[] = {1, 0, 1, 0};
  EXPECT_EQ(waylab_multimeter_program_json(mm, bad, 2, &s), WAYLAB_ERR_INVALID_STATE);
  waylab_multimeter_destroy(mm);
}

TEST(CApi, ScanRegionRender) {
  waylab_string* s = nullptr;
  ASSERT_EQ(waylab_scan_csv(0.6, 1.0, 3, &s), WAYLAB_OK);
  const std::string csv = take(s);
  EXPECT_EQ(csv.rfind("alpha,min_bound,nx,ny,nz", 0), 0u);
  ASSERT_EQ(waylab_render_svg(csv.c_str(), &s), WAYLAB_OK);
  EXPECT_NE(take(s).find("<svg"), std::string::npos);
  EXPECT_EQ(waylab_scan_csv(0.6, 1.0, 1, &s), WAYLAB_ERR_BAD_PARAMS);
  ASSERT_EQ(waylab_region_csv(0.9, 21, &s), WAYLAB_OK);
  EXPECT_NE(take(s).find("x,z"), std::string::npos);
  EXPECT_EQ(waylab_render_svg("garbage\n", &s), WAYLAB_ERR_MALFORMED_CSV);
}

TEST(CApi, AnalyzeAndAudit) {
  waylab_string* s = nullptr;
  ASSERT_EQ(waylab_analyze(nullptr, kCzModel, "[[1,0],[0,2]]", nullptr, nullptr, &s), WAYLAB_OK) << waylab_last_error();
  EXPECT_NE(take(s).find("prop3"), std::string::npos);
  EXPECT_EQ(waylab_analyze(nullptr, kCzModel, "[[1,2],[0,2]]", nullptr, nullptr, &s), WAYLAB_ERR_NOT_HERMITIAN);
}
