#include "waylab/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "detail/linalg.hpp"
#include "waylab/error.hpp"

namespace waylab {

namespace {

void require_hermitian_dim(const ComplexMatrix& m, std::size_t dim, const char* what) {
  if (!m.is_square() || m.rows() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  if (!is_hermitian(m)) throw Error(ErrorCode::NotHermitian, std::string(what) + " is not Hermitian");
}

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

ComplexMatrix probe_isometry(std::size_t system_dim, std::span<const Complex> probe) {
  const std::size_t k = probe.size();
  ComplexMatrix v(system_dim * k, system_dim);
  for (std::size_t i = 0; i < system_dim; ++i)
    for (std::size_t a = 0; a < k; ++a) v(i * k + a, i) = probe[a];
  return v;
}

NormalMeasurement::NormalMeasurement(std::size_t system_dim, std::size_t apparatus_dim,
                                     DiscreteObservable pointer, ComplexMatrix coupling,
                                     StateVector probe, double tol)
    : system_dim_(system_dim),
      apparatus_dim_(apparatus_dim),
      pointer_(std::move(pointer)),
      coupling_(std::move(coupling)),
      probe_(std::move(probe)) {
  if (system_dim_ == 0 || apparatus_dim_ == 0) {
    throw Error(ErrorCode::InvalidModel, "dimensions must be positive");
  }
  if (pointer_.space_dim() != apparatus_dim_) {
    throw Error(ErrorCode::InvalidModel, "pointer does not act on the apparatus space");
  }
  if (!is_sharp(pointer_, tol)) throw Error(ErrorCode::InvalidModel, "pointer observable is not sharp");
  if (coupling_.rows() != system_dim_ * apparatus_dim_ || !coupling_.is_square()) {
    throw Error(ErrorCode::InvalidModel, "coupling dimension differs from system_dim * apparatus_dim");
  }
  if (!is_unitary(coupling_, tol)) throw Error(ErrorCode::InvalidModel, "coupling is not unitary");
  if (probe_.size() != apparatus_dim_) {
    throw Error(ErrorCode::InvalidModel, "probe length differs from apparatus_dim");
  }
  if (std::abs(norm(probe_) - 1.0) > tol) throw Error(ErrorCode::InvalidModel, "probe is not a unit vector");
  isometry_ = probe_isometry(system_dim_, probe_);
  probe_projector_ = isometry_ * isometry_.adjoint();
}

ComplexMatrix evolved_pointer_effect(const NormalMeasurement& nm, std::size_t outcome_index) {
  const auto& u = nm.coupling();
  return u.adjoint() *
         tensor(ComplexMatrix::identity(nm.system_dim()), nm.pointer().effect(outcome_index)) * u;
}

ComplexMatrix evolved_pointer_effect(const NormalMeasurement& nm, std::string_view outcome) {
  const auto i = nm.pointer().index_of(outcome);
  if (!i) throw Error(ErrorCode::UnknownOutcome, "unknown pointer outcome '" + std::string(outcome) + "'");
  return evolved_pointer_effect(nm, *i);
}

DiscreteObservable measured_observable(const NormalMeasurement& nm) {
  const auto& v = nm.isometry();
  const auto vt = v.adjoint();
  std::vector<ComplexMatrix> effects;
  for (std::size_t x = 0; x < nm.pointer().size(); ++x) {
    ComplexMatrix e = vt * evolved_pointer_effect(nm, x) * v;
    e = 0.5 * (e + e.adjoint());
    effects.push_back(std::move(e));
  }
  return DiscreteObservable(nm.pointer().outcomes(), std::move(effects));
}

std::vector<double> sharpness_defects(const NormalMeasurement& nm) {
  std::vector<double> d;
  for (std::size_t x = 0; x < nm.pointer().size(); ++x)
    d.push_back(commutator_norm(evolved_pointer_effect(nm, x), nm.probe_projector()));
  return d;
}

double sharpness_defect(const NormalMeasurement& nm) { return max_of(sharpness_defects(nm)); }

bool is_repeatable(const NormalMeasurement& nm, double tol) {
  const auto e = measured_observable(nm);
  const auto& u = nm.coupling();
  const auto& v = nm.isometry();
  for (std::size_t x = 0; x < e.size(); ++x) {
    const ComplexMatrix repeated =
        v.adjoint() * u.adjoint() * tensor(e.effect(x), nm.pointer().effect(x)) * u * v;
    if (operator_norm(repeated - e.effect(x)) > tol) return false;
  }
  return true;
}

std::vector<double> yanase_defects(const NormalMeasurement& nm, const ComplexMatrix& l2) {
  require_hermitian_dim(l2, nm.apparatus_dim(), "l2");
  std::vector<double> d;
  for (const auto& z : nm.pointer().effects()) d.push_back(commutator_norm(z, l2));
  return d;
}

double yanase_defect(const NormalMeasurement& nm, const ComplexMatrix& l2) {
  return max_of(yanase_defects(nm, l2));
}

std::vector<double> weak_yanase_defects(const NormalMeasurement& nm, const ComplexMatrix& l) {
  require_hermitian_dim(l, nm.system_dim() * nm.apparatus_dim(), "l");
  std::vector<double> d;
  for (std::size_t x = 0; x < nm.pointer().size(); ++x)
    d.push_back(commutator_norm(evolved_pointer_effect(nm, x), l));
  return d;
}

double weak_yanase_defect(const NormalMeasurement& nm, const ComplexMatrix& l) {
  return max_of(weak_yanase_defects(nm, l));
}

ComplexMatrix heisenberg_channel(const NormalMeasurement& nm, const ComplexMatrix& b) {
  if (!b.is_square() || b.rows() != nm.system_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "heisenberg_channel: operator is not on the system space");
  }
  const auto& u = nm.coupling();
  const auto& v = nm.isometry();
  return v.adjoint() * u.adjoint() * tensor(b, ComplexMatrix::identity(nm.apparatus_dim())) * u * v;
}

bool repeatability_spectrum_check(const NormalMeasurement& nm, double tol) {
  if (!is_repeatable(nm, tol)) {
    throw Error(ErrorCode::PreconditionViolated, "measurement is not repeatable");
  }
  const auto measured = measured_observable(nm);
  for (const auto& e : measured.effects()) {
    const double n = operator_norm(e);
    if (n <= tol) continue;
    if (detail::hermitian_part_eigenvalues(e).back() < 1.0 - tol) return false;
  }
  return true;
}

}  // namespace waylab
