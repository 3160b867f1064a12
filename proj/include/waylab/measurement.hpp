#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "waylab/numerics.hpp"
#include "waylab/observables.hpp"

namespace waylab {

/// V_phi : H -> H (x) K, psi |-> psi (x) phi. Shape (dH*dK) x dH.
ComplexMatrix probe_isometry(std::size_t system_dim, std::span<const Complex> probe);

/// Normal measurement <K, Z, U, phi> on a system of dimension system_dim.
/// The pointer must be sharp, the coupling unitary on H (x) K and the probe a
/// unit vector; violations throw InvalidModel.
class NormalMeasurement {
 public:
  NormalMeasurement(std::size_t system_dim, std::size_t apparatus_dim, DiscreteObservable pointer,
                    ComplexMatrix coupling, StateVector probe, double tol = kTolerance);

  std::size_t system_dim() const noexcept { return system_dim_; }
  std::size_t apparatus_dim() const noexcept { return apparatus_dim_; }
  const DiscreteObservable& pointer() const noexcept { return pointer_; }
  const ComplexMatrix& coupling() const noexcept { return coupling_; }
  const StateVector& probe() const noexcept { return probe_; }
  const ComplexMatrix& isometry() const noexcept { return isometry_; }
  /// V V* = I (x) |phi><phi|
  const ComplexMatrix& probe_projector() const noexcept { return probe_projector_; }

 private:
  std::size_t system_dim_;
  std::size_t apparatus_dim_;
  DiscreteObservable pointer_;
  ComplexMatrix coupling_;
  StateVector probe_;
  ComplexMatrix isometry_;
  ComplexMatrix probe_projector_;
};

/// E(X) = V* U* (I (x) Z(X)) U V, labelled like the pointer.
DiscreteObservable measured_observable(const NormalMeasurement& nm);

/// U* (I (x) Z(X)) U. Throws UnknownOutcome.
ComplexMatrix evolved_pointer_effect(const NormalMeasurement& nm, std::string_view outcome);
ComplexMatrix evolved_pointer_effect(const NormalMeasurement& nm, std::size_t outcome_index);

/// Per-outcome ||[U*(I(x)Z(X))U, V V*]||; zero exactly when the measured
/// observable is sharp.
std::vector<double> sharpness_defects(const NormalMeasurement& nm);
double sharpness_defect(const NormalMeasurement& nm);

bool is_repeatable(const NormalMeasurement& nm, double tol = kTolerance);

/// max_X ||[Z(X), l2]|| for l2 Hermitian on K.
std::vector<double> yanase_defects(const NormalMeasurement& nm, const ComplexMatrix& l2);
double yanase_defect(const NormalMeasurement& nm, const ComplexMatrix& l2);

/// max_X ||[U*(I(x)Z(X))U, l]|| for l Hermitian on H (x) K.
std::vector<double> weak_yanase_defects(const NormalMeasurement& nm, const ComplexMatrix& l);
double weak_yanase_defect(const NormalMeasurement& nm, const ComplexMatrix& l);

/// E*(B) = V* U* (B (x) I) U V.
ComplexMatrix heisenberg_channel(const NormalMeasurement& nm, const ComplexMatrix& b);

/// Audit of the necessary condition for repeatable measurements: every
/// non-zero effect of the measured observable has eigenvalue 1. Throws
/// PreconditionViolated when the measurement is not repeatable.
bool repeatability_spectrum_check(const NormalMeasurement& nm, double tol = kTolerance);

}  // namespace waylab
