#include <gtest/gtest.h>

#include <cmath>

#include "waylab/error.hpp"
#include "waylab/observables.hpp"
#include "waylab/random_models.hpp"

using namespace waylab;

TEST(Observables, SpinObservableIsPovm) {
  const auto s = spin_observable(BlochVector(0.3, -0.2, 0.5));
  EXPECT_LE(normalisation_defect(s), 1e-15);
  EXPECT_FALSE(is_sharp(s));
  EXPECT_FALSE(is_trivial(s));
  EXPECT_EQ(s.outcomes()[0], "+");
}

TEST(Observables, UnitSpinIsSharpZeroIsTrivial) {
  EXPECT_TRUE(is_sharp(spin_observable(BlochVector::from_angles(0.7, 2.1))));
  EXPECT_TRUE(is_trivial(spin_observable(BlochVector(0, 0, 0))));
  EXPECT_NEAR(nontriviality(spin_observable(BlochVector(0, 0, 0.4))), 0.2, 1e-14);
}

TEST(Observables, BlochNormChecked) {
  try {
    BlochVector(1.0, 1e-3, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BlochNormExceeded);
  }
  EXPECT_NO_THROW(BlochVector(1.0 + 1e-12, 0.0, 0.0));
}

TEST(Observables, InvalidPovmRejected) {
  const auto half = ComplexMatrix::identity(2) * Complex(0.5);
  EXPECT_THROW(DiscreteObservable({"a"}, {half}), Error);
  EXPECT_THROW(DiscreteObservable({"a", "b"}, {pauli_z(), ComplexMatrix::identity(2) - pauli_z()}), Error);
  EXPECT_THROW(DiscreteObservable({"a", "a"}, {half, half}), Error);
  EXPECT_NO_THROW(DiscreteObservable({"a", "b"}, {half, half}));
}

TEST(Observables, EffectLookup) {
  const auto s = spin_observable(BlochVector::z_hat());
  EXPECT_EQ(s.index_of("-"), 1u);
  EXPECT_FALSE(s.index_of("?").has_value());
  try {
    s.effect("?");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownOutcome);
  }
}

TEST(Observables, CommutatorIdentityForSpins) {
  random::Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto m = random::random_ball_vector(rng), n = random::random_unit_vector(rng);
    const auto a = spin_observable(BlochVector(m)), b = spin_observable(BlochVector(n));
    EXPECT_NEAR(2.0 * commutator_norm(a.effect("+"), b.effect("+")), euclidean_norm(cross(m, n)), 1e-12);
    EXPECT_NEAR(mutual_commutation_defect(a, b), 0.5 * euclidean_norm(cross(m, n)), 1e-12);
  }
}

TEST(Observables, EffectDistance) {
  const auto a = spin_observable(BlochVector::z_hat()), b = spin_observable(BlochVector(0, 0, -1));
  EXPECT_NEAR(max_effect_distance(a, b), 1.0, 1e-14);
  const DiscreteObservable other({"x", "y"}, {a.effect(0), a.effect(1)});
  EXPECT_THROW(max_effect_distance(a, other), Error);
}
