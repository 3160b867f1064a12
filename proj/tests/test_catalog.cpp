#include <gtest/gtest.h>

#include "waylab/catalog.hpp"
#include "waylab/error.hpp"

using namespace waylab;

class CatalogFacts : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogFacts, EveryExpectedFactHolds) {
  const auto& e = catalog::entry(GetParam());
  const auto facts = e.facts(e.params);
  ASSERT_FALSE(facts.empty());
  for (const auto& f : facts) {
    const auto out = f.check();
    EXPECT_TRUE(out.passed) << f.claim << " [" << f.checker << "] value=" << out.value
                            << " threshold=" << out.threshold << " " << out.detail;
  }
}

INSTANTIATE_TEST_SUITE_P(All, CatalogFacts,
                         ::testing::Values("ex3-controlled-z", "ex4-genway", "ex5-swap-hadamard", "u1", "u2", "u3",
                                           "u-alpha", "ex3-measurement", "ex4-measurement", "ex5-multimeter"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Catalog, EntriesCoverTheParametrisedTable) {
  EXPECT_EQ(catalog::entries().size(), 10u);
  EXPECT_THROW(catalog::entry("nope"), Error);
}

TEST(Catalog, ParamsValidated) {
  const auto& ua = catalog::entry("u-alpha");
  EXPECT_DOUBLE_EQ(catalog::resolve_params(ua, {{"alpha", 0.7}}).at("alpha"), 0.7);
  EXPECT_THROW(catalog::resolve_params(ua, {{"alpha", 1.5}}), Error);
  EXPECT_THROW(catalog::resolve_params(ua, {{"beta", 0.5}}), Error);
  EXPECT_THROW(catalog::build("ex3-measurement", {{"sign", 0.5}}), Error);
}

TEST(Catalog, ParametrisedEntriesAtOtherValues) {
  const auto& ua = catalog::entry("u-alpha");
  for (double a : {0.6, 1.0})
    for (const auto& f : ua.facts(catalog::resolve_params(ua, {{"alpha", a}})))
      EXPECT_TRUE(f.check().passed) << "alpha=" << a << ": " << f.claim;
  const auto& ex3 = catalog::entry("ex3-measurement");
  for (const auto& f : ex3.facts(catalog::resolve_params(ex3, {{"sign", -1.0}})))
    EXPECT_TRUE(f.check().passed) << "sign=-1: " << f.claim;
}

TEST(Catalog, BuildKinds) {
  EXPECT_TRUE(std::holds_alternative<ComplexMatrix>(catalog::build("u3")));
  EXPECT_TRUE(std::holds_alternative<NormalMeasurement>(catalog::build("ex4-measurement")));
  EXPECT_TRUE(std::holds_alternative<Multimeter>(catalog::build("ex5-multimeter")));
}

TEST(Catalog, ApparatusSideObservableValidates) {
  const auto z = spin_observable(BlochVector::z_hat());
  EXPECT_THROW(catalog::apparatus_side_observable(catalog::u3(), 2, 2, z, StateVector{1.0, 1.0}), Error);
  const auto a = catalog::apparatus_side_observable(catalog::controlled_z(), 2, 2, z, catalog::ket0());
  EXPECT_LE(normalisation_defect(a), 1e-12);
}

TEST(Catalog, ClassifyRejectsNonQubit) {
  EXPECT_THROW(catalog::classify_sides(ComplexMatrix::identity(6), 2, 3), Error);
}
