#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "waylab/catalog.hpp"
#include "waylab/error.hpp"
#include "waylab/measurement.hpp"
#include "waylab/random_models.hpp"

using namespace waylab;

TEST(Measurement, ProbeIsometryShapeAndProjector) {
  const auto phi = catalog::ket_plus();
  const auto v = probe_isometry(2, phi);
  EXPECT_EQ(v.rows(), 4u);
  EXPECT_EQ(v.cols(), 2u);
  EXPECT_LE(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(2)), 1e-15);
  const auto nm = catalog::controlled_z_measurement();
  const auto expected = oracle::kron(ComplexMatrix::identity(2), ComplexMatrix::outer(phi, phi));
  EXPECT_LE(max_abs_diff(nm.probe_projector(), expected), 1e-15);
}

TEST(Measurement, ControlledZMeasuresSz) {
  for (int sign : {+1, -1}) {
    const auto nm = catalog::controlled_z_measurement(sign);
    const auto e = measured_observable(nm);
    EXPECT_LE(max_effect_distance(e, spin_observable(BlochVector(0, 0, sign))), 1e-10);
    EXPECT_LE(sharpness_defect(nm), 1e-10);
    EXPECT_TRUE(is_repeatable(nm));
    EXPECT_TRUE(repeatability_spectrum_check(nm));
  }
}

TEST(Measurement, MeasuredObservableMatchesDirectFormula) {
  random::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto nm = random::random_measurement(2, 3, rng);
    const auto e = measured_observable(nm);
    const auto v = probe_isometry(2, nm.probe());
    for (std::size_t x = 0; x < e.size(); ++x) {
      const auto lifted = oracle::kron(ComplexMatrix::identity(2), nm.pointer().effect(x));
      const auto direct =
          oracle::multiply(oracle::multiply(v.adjoint(), nm.coupling().adjoint()), oracle::multiply(lifted, oracle::multiply(nm.coupling(), v)));
      EXPECT_LE(max_abs_diff(e.effect(x), direct), 1e-12);
    }
    EXPECT_LE(normalisation_defect(e), 1e-12);
  }
}

TEST(Measurement, InvalidModelsRejected) {
  const auto u = catalog::controlled_z();
  const auto z = spin_observable(BlochVector::x_hat());
  EXPECT_THROW(NormalMeasurement(2, 2, spin_observable(BlochVector(0.5, 0, 0)), u, catalog::ket0()), Error);
  EXPECT_THROW(NormalMeasurement(2, 2, z, u * Complex(2.0), catalog::ket0()), Error);
  EXPECT_THROW(NormalMeasurement(2, 2, z, u, StateVector{1.0, 1.0}), Error);
  EXPECT_THROW(NormalMeasurement(2, 3, z, u, catalog::ket0()), Error);
}

TEST(Measurement, YanaseDefects) {
  const auto nm = catalog::controlled_z_measurement();
  EXPECT_NEAR(yanase_defect(nm, pauli_z()), 1.0, 1e-12);
  EXPECT_LE(yanase_defect(nm, pauli_x()), 1e-15);
}

TEST(Measurement, HeisenbergChannelOfIdentity) {
  random::Rng rng(3);
  const auto nm = random::random_measurement(3, 2, rng);
  EXPECT_LE(max_abs_diff(heisenberg_channel(nm, ComplexMatrix::identity(3)), ComplexMatrix::identity(3)), 1e-12);
}

TEST(Measurement, RandomRepeatableModels) {
  random::Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto nm = random::random_repeatable_measurement(2 + t % 2, 2 + (t / 2) % 2, rng);
    EXPECT_TRUE(is_repeatable(nm));
    EXPECT_TRUE(repeatability_spectrum_check(nm));
  }
}

TEST(Measurement, SpectrumCheckRequiresRepeatability) {
  const auto nm = catalog::genway_measurement(BlochVector(0.6, 0.0, 0.8), catalog::ket0());
  if (!is_repeatable(nm)) {
    EXPECT_THROW(repeatability_spectrum_check(nm), Error);
  }
}
