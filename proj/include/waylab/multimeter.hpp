#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "waylab/measurement.hpp"
#include "waylab/way.hpp"

namespace waylab {

/// Programmable multimeter <K, Z, U>: a normal measurement without a fixed probe.
class Multimeter {
 public:
  Multimeter(std::size_t system_dim, std::size_t apparatus_dim, DiscreteObservable pointer,
             ComplexMatrix coupling, double tol = kTolerance);

  std::size_t system_dim() const noexcept { return system_dim_; }
  std::size_t apparatus_dim() const noexcept { return apparatus_dim_; }
  const DiscreteObservable& pointer() const noexcept { return pointer_; }
  const ComplexMatrix& coupling() const noexcept { return coupling_; }

  /// The normal measurement obtained by loading `phi`. Throws InvalidState.
  NormalMeasurement with_probe(std::span<const Complex> phi) const;

 private:
  std::size_t system_dim_;
  std::size_t apparatus_dim_;
  DiscreteObservable pointer_;
  ComplexMatrix coupling_;
};

/// The observable programmed by the probe state `phi`.
DiscreteObservable program(const Multimeter& mm, std::span<const Complex> phi);

struct OrthogonalityAudit {
  bool distinct_sharp = false;  // both programs sharp and unequal
  double overlap = 0.0;         // |<phi1|phi2>|
  bool first_sharp = false;
  bool second_sharp = false;
  double program_distance = 0.0;
};

/// Unequal sharp programs require orthogonal programming states.
OrthogonalityAudit orthogonality_audit(const Multimeter& mm, std::span<const Complex> phi1,
                                       std::span<const Complex> phi2, double tol = kTolerance);

/// Unitary G with G phi1 = phi2 acting as the rotation [[<phi1|phi2>, -r], [r, conj]]
/// in the orthonormal frame (phi1, e2) of span{phi1, phi2} and as the identity
/// on its orthocomplement. Parallel states give the phase times the identity
/// on span{phi1}.
ComplexMatrix construct_g(std::span<const Complex> phi1, std::span<const Complex> phi2,
                          double tol = kTolerance);

/// ||[A1(X), E2(Y)]|| <= ||[U*(I(x)Z(X))U, U_G*(I(x)Z(Y))U_G]||, U_G = U (I (x) G).
/// `g` overrides the default construct_g(phi1, phi2). Throws NotSharpProgram
/// when phi1 does not program a sharp observable.
WayBoundReport prop5_bound(const Multimeter& mm, std::span<const Complex> phi1, std::span<const Complex> phi2,
                           std::string_view x, std::string_view y,
                           const std::optional<ComplexMatrix>& g = std::nullopt, double tol = kTolerance);

}  // namespace waylab
