#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waylab/numerics.hpp"

namespace waylab {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Real 3-vector with Euclidean norm at most 1 (+ tolerance).
class BlochVector {
 public:
  BlochVector(double x, double y, double z, double tol = kTolerance);
  explicit BlochVector(const std::array<double, 3>& m, double tol = kTolerance)
      : BlochVector(m[0], m[1], m[2], tol) {}

  static BlochVector x_hat() { return {1.0, 0.0, 0.0}; }
  static BlochVector y_hat() { return {0.0, 1.0, 0.0}; }
  static BlochVector z_hat() { return {0.0, 0.0, 1.0}; }
  /// Unit vector from polar angle theta (from +z) and azimuth phi.
  static BlochVector from_angles(double theta, double phi);

  const std::array<double, 3>& components() const noexcept { return m_; }
  double operator[](std::size_t i) const { return m_[i]; }
  double norm() const;
  /// m . sigma
  ComplexMatrix dot_sigma() const;

 private:
  std::array<double, 3> m_;
};

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b);
double euclidean_norm(const std::array<double, 3>& a);

/// Finite-outcome POVM. Construction validates Hermiticity, positivity and
/// normalisation; a constructed value always satisfies them.
class DiscreteObservable {
 public:
  DiscreteObservable(std::vector<std::string> outcomes, std::vector<ComplexMatrix> effects,
                     double tol = kTolerance);

  std::size_t space_dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return effects_.size(); }
  const std::vector<std::string>& outcomes() const noexcept { return outcomes_; }
  const std::vector<ComplexMatrix>& effects() const noexcept { return effects_; }
  const ComplexMatrix& effect(std::size_t i) const { return effects_.at(i); }
  /// Throws UnknownOutcome.
  const ComplexMatrix& effect(std::string_view label) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> outcomes_;
  std::vector<ComplexMatrix> effects_;
};

/// S_m(+/-) = (I +/- m.sigma)/2 with outcome labels "+" and "-".
DiscreteObservable spin_observable(const BlochVector& m);

bool is_sharp(const DiscreteObservable& e, double tol = kTolerance);
bool is_trivial(const DiscreteObservable& e, double tol = kTolerance);

/// max over outcome pairs of ||[a(X), b(Y)]||.
double mutual_commutation_defect(const DiscreteObservable& a, const DiscreteObservable& b);

/// max over outcomes of the operator-norm distance to the nearest multiple of
/// the identity, i.e. half the spectral spread of each effect.
double nontriviality(const DiscreteObservable& e);

/// max over matched labels of ||a(X) - b(X)||. Throws BadParams when the
/// label sets differ.
double max_effect_distance(const DiscreteObservable& a, const DiscreteObservable& b);

/// Sum of effects minus identity, in operator norm.
double normalisation_defect(const DiscreteObservable& e);

}  // namespace waylab
