#pragma once

#include <array>
#include <cstddef>
#include <random>

#include "waylab/measurement.hpp"
#include "waylab/multimeter.hpp"

namespace waylab::random {

using Rng = std::mt19937_64;

StateVector random_state(std::size_t dim, Rng& rng);
/// Haar-like unitary: Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
/// Hermitian with i.i.d. Gaussian entries.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);
/// Positive semidefinite B B*.
ComplexMatrix random_positive(std::size_t dim, Rng& rng);
std::array<double, 3> random_unit_vector(Rng& rng);
/// Uniform in the unit ball.
std::array<double, 3> random_ball_vector(Rng& rng);

/// Random PVM on C^dim with `outcomes` non-zero projections (labels x1, x2, ...).
DiscreteObservable random_pvm(std::size_t dim, std::size_t outcomes, Rng& rng);

/// Extend `vectors` (orthonormal, length dim) with random vectors to an
/// orthonormal basis of C^dim.
std::vector<StateVector> complete_orthonormal(std::vector<StateVector> vectors, std::size_t dim, Rng& rng);

/// Random unitary coupling, random sharp pointer and random probe.
NormalMeasurement random_measurement(std::size_t system_dim, std::size_t apparatus_dim, Rng& rng);

/// Repeatable by construction: a sharp observable A with outcome blocks and a
/// pointer with matching outcomes; U maps a (x) phi to a (x) z_i for a in the
/// range of A(i) and is completed to a unitary on a random complement. The
/// measured observable is A.
NormalMeasurement random_repeatable_measurement(std::size_t system_dim, std::size_t apparatus_dim, Rng& rng);

}  // namespace waylab::random
