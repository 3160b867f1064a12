#include "waylab/random_models.hpp"

#include <algorithm>
#include <cmath>

#include "waylab/error.hpp"

namespace waylab::random {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

ComplexMatrix from_columns(const std::vector<StateVector>& cols) {
  const std::size_t d = cols.front().size();
  ComplexMatrix m(d, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = cols[j][i];
  return m;
}

/// Each outcome gets at least one basis index; the rest are assigned at random.
std::vector<std::size_t> assign_outcomes(std::size_t basis_size, std::size_t outcomes, Rng& rng) {
  std::vector<std::size_t> owner(basis_size);
  std::uniform_int_distribution<std::size_t> pick(0, outcomes - 1);
  for (std::size_t i = 0; i < basis_size; ++i) owner[i] = i < outcomes ? i : pick(rng);
  return owner;
}

}  // namespace

StateVector random_state(std::size_t dim, Rng& rng) {
  StateVector v(dim);
  for (auto& z : v) z = gaussian(rng);
  return normalized(v);
}

std::vector<StateVector> complete_orthonormal(std::vector<StateVector> vectors, std::size_t dim, Rng& rng) {
  while (vectors.size() < dim) {
    StateVector v = random_state(dim, rng);
    // Two Gram-Schmidt passes.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : vectors) {
        const Complex c = inner(b, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= c * b[i];
      }
    if (norm(v) < 1e-6) continue;
    vectors.push_back(normalized(v));
  }
  return vectors;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  return from_columns(complete_orthonormal({}, dim, rng));
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = gaussian(rng);
  return 0.5 * (a + a.adjoint());
}

ComplexMatrix random_positive(std::size_t dim, Rng& rng) {
  ComplexMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = gaussian(rng);
  return a * a.adjoint();
}

std::array<double, 3> random_unit_vector(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::array<double, 3> v{n(rng), n(rng), n(rng)};
  const double len = euclidean_norm(v);
  for (auto& c : v) c /= len;
  return v;
}

std::array<double, 3> random_ball_vector(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto v = random_unit_vector(rng);
  const double r = std::cbrt(u(rng));
  for (auto& c : v) c *= r;
  return v;
}

DiscreteObservable random_pvm(std::size_t dim, std::size_t outcomes, Rng& rng) {
  if (outcomes == 0 || outcomes > dim) throw Error(ErrorCode::BadParams, "PVM outcome count must be in [1, dim]");
  const auto basis = complete_orthonormal({}, dim, rng);
  const auto owner = assign_outcomes(dim, outcomes, rng);
  std::vector<ComplexMatrix> effects(outcomes, ComplexMatrix(dim, dim));
  for (std::size_t i = 0; i < dim; ++i) effects[owner[i]] += ComplexMatrix::outer(basis[i], basis[i]);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < outcomes; ++k) labels.push_back("x" + std::to_string(k + 1));
  return DiscreteObservable(std::move(labels), std::move(effects));
}

NormalMeasurement random_measurement(std::size_t system_dim, std::size_t apparatus_dim, Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(std::min<std::size_t>(2, apparatus_dim), apparatus_dim);
  return NormalMeasurement(system_dim, apparatus_dim, random_pvm(apparatus_dim, count(rng), rng),
                           random_unitary(system_dim * apparatus_dim, rng), random_state(apparatus_dim, rng));
}

NormalMeasurement random_repeatable_measurement(std::size_t system_dim, std::size_t apparatus_dim, Rng& rng) {
  const std::size_t max_out = std::min(system_dim, apparatus_dim);
  std::uniform_int_distribution<std::size_t> count(std::min<std::size_t>(2, max_out), max_out);
  const std::size_t outcomes = count(rng);

  const auto system_basis = complete_orthonormal({}, system_dim, rng);
  const auto system_owner = assign_outcomes(system_dim, outcomes, rng);
  const auto pointer_basis = complete_orthonormal({}, apparatus_dim, rng);
  const auto pointer_owner = assign_outcomes(apparatus_dim, outcomes, rng);

  std::vector<ComplexMatrix> pointer_effects(outcomes, ComplexMatrix(apparatus_dim, apparatus_dim));
  for (std::size_t i = 0; i < apparatus_dim; ++i) {
    pointer_effects[pointer_owner[i]] += ComplexMatrix::outer(pointer_basis[i], pointer_basis[i]);
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < outcomes; ++k) labels.push_back("x" + std::to_string(k + 1));
  DiscreteObservable pointer(labels, std::move(pointer_effects));

  const StateVector phi = random_state(apparatus_dim, rng);
  // assign_outcomes puts outcome k on index k for k < outcomes.
  std::vector<StateVector> domain, image;
  for (std::size_t r = 0; r < system_dim; ++r) {
    domain.push_back(tensor(system_basis[r], phi));
    image.push_back(tensor(system_basis[r], pointer_basis[system_owner[r]]));
  }
  const std::size_t total = system_dim * apparatus_dim;
  domain = complete_orthonormal(std::move(domain), total, rng);
  image = complete_orthonormal(std::move(image), total, rng);

  ComplexMatrix u(total, total);
  for (std::size_t k = 0; k < total; ++k) u += ComplexMatrix::outer(image[k], domain[k]);
  return NormalMeasurement(system_dim, apparatus_dim, std::move(pointer), std::move(u), phi);
}

}  // namespace waylab::random
