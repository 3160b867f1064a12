#include "waylab/multimeter.hpp"

#include <cmath>

#include "waylab/error.hpp"

namespace waylab {

namespace {

void require_unit(std::span<const Complex> phi, std::size_t dim, double tol, const char* what) {
  if (phi.size() != dim) {
    throw Error(ErrorCode::InvalidState, std::string(what) + " has length " + std::to_string(phi.size()) +
                                             ", expected " + std::to_string(dim));
  }
  if (std::abs(norm(phi) - 1.0) > tol) throw Error(ErrorCode::InvalidState, std::string(what) + " is not a unit vector");
}

}  // namespace

Multimeter::Multimeter(std::size_t system_dim, std::size_t apparatus_dim, DiscreteObservable pointer,
                       ComplexMatrix coupling, double tol)
    : system_dim_(system_dim),
      apparatus_dim_(apparatus_dim),
      pointer_(std::move(pointer)),
      coupling_(std::move(coupling)) {
  if (system_dim_ == 0 || apparatus_dim_ == 0) throw Error(ErrorCode::InvalidModel, "dimensions must be positive");
  if (pointer_.space_dim() != apparatus_dim_) {
    throw Error(ErrorCode::InvalidModel, "pointer does not act on the apparatus space");
  }
  if (!is_sharp(pointer_, tol)) throw Error(ErrorCode::InvalidModel, "pointer observable is not sharp");
  if (!coupling_.is_square() || coupling_.rows() != system_dim_ * apparatus_dim_) {
    throw Error(ErrorCode::InvalidModel, "coupling dimension differs from system_dim * apparatus_dim");
  }
  if (!is_unitary(coupling_, tol)) throw Error(ErrorCode::InvalidModel, "coupling is not unitary");
}

NormalMeasurement Multimeter::with_probe(std::span<const Complex> phi) const {
  require_unit(phi, apparatus_dim_, kTolerance, "programming state");
  return NormalMeasurement(system_dim_, apparatus_dim_, pointer_, coupling_, StateVector(phi.begin(), phi.end()));
}

DiscreteObservable program(const Multimeter& mm, std::span<const Complex> phi) {
  return measured_observable(mm.with_probe(phi));
}

OrthogonalityAudit orthogonality_audit(const Multimeter& mm, std::span<const Complex> phi1,
                                       std::span<const Complex> phi2, double tol) {
  const auto a1 = program(mm, phi1);
  const auto a2 = program(mm, phi2);
  OrthogonalityAudit out;
  out.first_sharp = is_sharp(a1, tol);
  out.second_sharp = is_sharp(a2, tol);
  out.program_distance = max_effect_distance(a1, a2);
  out.distinct_sharp = out.first_sharp && out.second_sharp && out.program_distance > tol;
  out.overlap = std::abs(inner(phi1, phi2));
  return out;
}

ComplexMatrix construct_g(std::span<const Complex> phi1, std::span<const Complex> phi2, double tol) {
  if (phi1.size() != phi2.size()) throw Error(ErrorCode::DimensionMismatch, "programming states differ in length");
  require_unit(phi1, phi1.size(), tol, "phi1");
  require_unit(phi2, phi2.size(), tol, "phi2");
  const std::size_t d = phi1.size();
  const Complex overlap = inner(phi1, phi2);  // <phi1|phi2>

  StateVector e2(phi2.begin(), phi2.end());
  for (std::size_t i = 0; i < d; ++i) e2[i] -= overlap * phi1[i];
  const double r = norm(e2);

  ComplexMatrix g = ComplexMatrix::identity(d);
  if (r <= tol) {
    // phi2 = e^{i theta} phi1.
    const Complex phase = overlap / std::abs(overlap);
    g += (phase - 1.0) * ComplexMatrix::outer(phi1, phi1);
    return g;
  }
  for (auto& z : e2) z /= r;
  // In the frame (phi1, e2): [[overlap, -r], [r, conj(overlap)]], determinant 1.
  g -= ComplexMatrix::outer(phi1, phi1);
  g -= ComplexMatrix::outer(e2, e2);
  g += overlap * ComplexMatrix::outer(phi1, phi1);
  g += Complex(-r) * ComplexMatrix::outer(phi1, e2);
  g += Complex(r) * ComplexMatrix::outer(e2, phi1);
  g += std::conj(overlap) * ComplexMatrix::outer(e2, e2);
  return g;
}

WayBoundReport prop5_bound(const Multimeter& mm, std::span<const Complex> phi1, std::span<const Complex> phi2,
                           std::string_view x, std::string_view y, const std::optional<ComplexMatrix>& g,
                           double tol) {
  const auto first = mm.with_probe(phi1);
  const auto a1 = measured_observable(first);
  if (!is_sharp(a1, tol)) throw Error(ErrorCode::NotSharpProgram, "phi1 does not program a sharp observable");
  const auto e2 = program(mm, phi2);

  const ComplexMatrix rotation = g ? *g : construct_g(phi1, phi2, tol);
  if (!rotation.is_square() || rotation.rows() != mm.apparatus_dim() || !is_unitary(rotation, tol)) {
    throw Error(ErrorCode::BadParams, "G must be unitary on the apparatus space");
  }
  const StateVector mapped = rotation.apply(phi1);
  double mismatch = 0.0;
  for (std::size_t i = 0; i < mapped.size(); ++i) mismatch = std::max(mismatch, std::abs(mapped[i] - phi2[i]));
  if (mismatch > tol) throw Error(ErrorCode::BadParams, "G does not map phi1 onto phi2");

  const auto& u = mm.coupling();
  const ComplexMatrix ug = u * tensor(ComplexMatrix::identity(mm.system_dim()), rotation);
  const ComplexMatrix id_h = ComplexMatrix::identity(mm.system_dim());
  const ComplexMatrix first_pointer = u.adjoint() * tensor(id_h, mm.pointer().effect(x)) * u;
  const ComplexMatrix second_pointer = ug.adjoint() * tensor(id_h, mm.pointer().effect(y)) * ug;

  WayBoundReport r;
  r.lhs = commutator_norm(a1.effect(x), e2.effect(y));
  r.rhs_terms = {{"evolved_pointers", commutator_norm(first_pointer, second_pointer)}};
  r.rhs_total = r.rhs_terms[0].value;
  r.slack = r.rhs_total - r.lhs;
  return r;
}

}  // namespace waylab
