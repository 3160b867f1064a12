#include <gtest/gtest.h>

#include "waylab/catalog.hpp"
#include "waylab/error.hpp"
#include "waylab/report.hpp"
#include "waylab/serialization.hpp"

using namespace waylab;
using io::Json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::NumericFailure;
}

}  // namespace

TEST(Serialization, MeasurementRoundTrip) {
  const auto nm = catalog::controlled_z_measurement(-1);
  const auto j = io::to_json(nm);
  const auto back = io::measurement_from_json(io::parse(io::dump(j), "model"));
  EXPECT_EQ(back.coupling(), nm.coupling());
  EXPECT_EQ(back.probe(), nm.probe());
  EXPECT_EQ(io::to_json(back), j);
}

TEST(Serialization, MultimeterRoundTrip) {
  const auto mm = catalog::swap_hadamard_multimeter();
  const auto j = io::to_json(mm);
  EXPECT_FALSE(j.contains("probe"));
  const auto model = io::model_from_json(j);
  ASSERT_TRUE(std::holds_alternative<Multimeter>(model));
  EXPECT_EQ(std::get<Multimeter>(model).coupling(), mm.coupling());
}

TEST(Serialization, FlatMatrixAndBareNumbers) {
  const Json j = Json::parse(R"({"rows": 2, "cols": 2, "data": [1, [0, 1], [0, -1], 0]})");
  const auto m = io::matrix_from_json(j, "m");
  EXPECT_EQ(m(0, 1), Complex(0, 1));
  EXPECT_EQ(m(1, 0), Complex(0, -1));
}

TEST(Serialization, SchemaErrorsNameTheField) {
  auto j = io::to_json(catalog::controlled_z_measurement());
  j["coupling"][2][1] = "x";
  try {
    io::measurement_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Schema);
    EXPECT_NE(std::string(e.what()).find("coupling[2][1]"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { io::parse("{", "model"); }), ErrorCode::Schema);
  EXPECT_EQ(code_of([] { io::matrix_from_json(Json::parse("[[1, 2], [3]]"), "m"); }), ErrorCode::Schema);
}

TEST(Serialization, ValidationErrorsPropagate) {
  auto j = io::to_json(catalog::controlled_z_measurement());
  j["probe"] = Json::parse("[[1, 0], [1, 0]]");
  EXPECT_EQ(code_of([&] { io::measurement_from_json(j); }), ErrorCode::InvalidModel);
}

TEST(Serialization, StatesAndQuantities) {
  const auto states = io::states_from_json(Json::parse(R"({"states": [{"label": "zero", "vector": [1, 0]}]})"));
  ASSERT_EQ(states.size(), 1u);
  EXPECT_EQ(states[0].label, "zero");
  const auto add = io::additive_from_json(Json::parse(R"({"l1": [[1, 0], [0, 2]], "l2": [[0, 1], [1, 0]]})"));
  EXPECT_EQ(add.combined().rows(), 4u);
  EXPECT_EQ(code_of([] { io::additive_from_json(Json::parse(R"({"l1": [[0, 1], [0, 0]], "l2": [[1]]})")); }),
            ErrorCode::NotHermitian);
  const auto mult = io::multiplicative_from_json(Json::parse(R"({"l2": [[1, 0], [0, -1]]})"));
  EXPECT_FALSE(mult.l1.has_value());
}

TEST(Report, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-17, -2.5e300, 0.0}) EXPECT_EQ(std::stod(report::format_double(v)), v);
}

TEST(Report, ExampleReportShape) {
  const auto r = report::example_report("ex3-measurement");
  EXPECT_EQ(r["id"], "ex3-measurement");
  EXPECT_TRUE(r["all_passed"].get<bool>());
  EXPECT_TRUE(r.contains("summary"));
  for (const auto& f : r["facts"]) EXPECT_TRUE(f.contains("tag"));
  EXPECT_EQ(report::catalog_index()["entries"].size(), 10u);
}

TEST(Report, AnalyzeMeasurementWithQuantities) {
  const auto model = io::to_json(catalog::controlled_z_measurement());
  const Json q = Json::parse("[[1, 0], [0, 3]]");
  const auto r = report::analyze(model, {.quantity = &q});
  EXPECT_TRUE(r["quantity"].contains("prop3"));
  EXPECT_TRUE(r["quantity"].contains("prop2"));
  const Json add = Json::parse(R"({"l1": [[1, 0], [0, 2]], "l2": [[0, 0], [0, 0]]})");
  const auto ra = report::analyze(model, {.additive = &add});
  EXPECT_TRUE(ra.contains("additive"));
}

TEST(Report, MultimeterAudit) {
  const auto model = io::to_json(catalog::swap_hadamard_multimeter());
  const Json states = Json::parse(R"({"states": [{"label": "0", "vector": [1, 0]}, {"label": "1", "vector": [0, 1]}]})");
  const auto r = report::multimeter_audit(model, states);
  EXPECT_TRUE(r["orthogonality_ok"].get<bool>());
  EXPECT_EQ(r["programs"].size(), 2u);
}

TEST(Report, ScanCsvHeader) {
  const std::vector<ScanPoint> pts{{0.6, 1.5, {0.0, 0.0, 1.0}}};
  const auto csv = report::scan_csv(pts);
  EXPECT_EQ(csv.rfind("alpha,min_bound,nx,ny,nz\n", 0), 0u);
}
