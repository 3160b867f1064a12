#include "waylab/observables.hpp"

#include <algorithm>
#include <cmath>

#include "detail/linalg.hpp"
#include "waylab/error.hpp"

namespace waylab {

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
}
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

BlochVector::BlochVector(double x, double y, double z, double tol) : m_{x, y, z} {
  if (!(norm() <= 1.0 + tol)) {
    throw Error(ErrorCode::BlochNormExceeded,
                "Bloch vector norm " + std::to_string(norm()) + " exceeds 1");
  }
}

BlochVector BlochVector::from_angles(double theta, double phi) {
  return BlochVector(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                     std::cos(theta));
}

double BlochVector::norm() const { return euclidean_norm(m_); }

ComplexMatrix BlochVector::dot_sigma() const {
  return ComplexMatrix::from_rows({{m_[2], Complex(m_[0], -m_[1])},
                                   {Complex(m_[0], m_[1]), -m_[2]}});
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double euclidean_norm(const std::array<double, 3>& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

DiscreteObservable::DiscreteObservable(std::vector<std::string> outcomes,
                                       std::vector<ComplexMatrix> effects, double tol)
    : outcomes_(std::move(outcomes)), effects_(std::move(effects)) {
  if (effects_.empty()) throw Error(ErrorCode::InvalidObservable, "observable has no outcomes");
  if (outcomes_.size() != effects_.size()) {
    throw Error(ErrorCode::InvalidObservable, "outcome label count differs from effect count");
  }
  for (std::size_t i = 0; i < outcomes_.size(); ++i)
    for (std::size_t j = i + 1; j < outcomes_.size(); ++j)
      if (outcomes_[i] == outcomes_[j]) {
        throw Error(ErrorCode::InvalidObservable, "duplicate outcome label '" + outcomes_[i] + "'");
      }
  if (!effects_.front().is_square() || effects_.front().rows() == 0) {
    throw Error(ErrorCode::InvalidObservable, "effects must be non-empty square matrices");
  }
  dim_ = effects_.front().rows();
  for (std::size_t i = 0; i < effects_.size(); ++i) {
    const auto& e = effects_[i];
    if (!e.is_square() || e.rows() != dim_) {
      throw Error(ErrorCode::InvalidObservable, "effect '" + outcomes_[i] + "' has the wrong dimension");
    }
    if (!is_hermitian(e, tol)) {
      throw Error(ErrorCode::InvalidObservable, "effect '" + outcomes_[i] + "' is not Hermitian");
    }
    if (!is_positive(e, tol)) {
      throw Error(ErrorCode::InvalidObservable, "effect '" + outcomes_[i] + "' is not positive");
    }
  }
  if (normalisation_defect(*this) > tol) {
    throw Error(ErrorCode::InvalidObservable, "effects do not sum to the identity");
  }
}

const ComplexMatrix& DiscreteObservable::effect(std::string_view label) const {
  const auto i = index_of(label);
  if (!i) throw Error(ErrorCode::UnknownOutcome, "unknown outcome label '" + std::string(label) + "'");
  return effects_[*i];
}

std::optional<std::size_t> DiscreteObservable::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i)
    if (outcomes_[i] == label) return i;
  return std::nullopt;
}

DiscreteObservable spin_observable(const BlochVector& m) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix ms = m.dot_sigma();
  return DiscreteObservable({"+", "-"}, {0.5 * (id + ms), 0.5 * (id - ms)});
}

bool is_sharp(const DiscreteObservable& e, double tol) {
  for (const auto& eff : e.effects())
    if (!is_projection(eff, tol)) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (operator_norm(e.effect(i) * e.effect(j)) > tol) return false;
  return true;
}

bool is_trivial(const DiscreteObservable& e, double tol) {
  for (const auto& eff : e.effects()) {
    const double p = eff.trace().real() / static_cast<double>(e.space_dim());
    if (operator_norm(eff - p * ComplexMatrix::identity(e.space_dim())) > tol) return false;
  }
  return true;
}

double mutual_commutation_defect(const DiscreteObservable& a, const DiscreteObservable& b) {
  if (a.space_dim() != b.space_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "observables act on spaces of different dimension");
  }
  double d = 0.0;
  for (const auto& ea : a.effects())
    for (const auto& eb : b.effects()) d = std::max(d, commutator_norm(ea, eb));
  return d;
}

double nontriviality(const DiscreteObservable& e) {
  double d = 0.0;
  for (const auto& eff : e.effects()) {
    const auto values = detail::hermitian_part_eigenvalues(eff);
    d = std::max(d, 0.5 * (values.back() - values.front()));
  }
  return d;
}

double max_effect_distance(const DiscreteObservable& a, const DiscreteObservable& b) {
  if (a.space_dim() != b.space_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "observables act on spaces of different dimension");
  }
  if (a.size() != b.size()) throw Error(ErrorCode::BadParams, "observables have different outcome sets");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto j = b.index_of(a.outcomes()[i]);
    if (!j) throw Error(ErrorCode::BadParams, "observables have different outcome sets");
    d = std::max(d, operator_norm(a.effect(i) - b.effect(*j)));
  }
  return d;
}

double normalisation_defect(const DiscreteObservable& e) {
  ComplexMatrix sum(e.space_dim(), e.space_dim());
  for (const auto& eff : e.effects()) sum += eff;
  return operator_norm(sum - ComplexMatrix::identity(e.space_dim()));
}

}  // namespace waylab
