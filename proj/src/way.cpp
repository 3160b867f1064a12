#include "waylab/way.hpp"

#include <algorithm>
#include <cmath>

#include "waylab/error.hpp"

namespace waylab {

namespace {

void require_operator_on(const ComplexMatrix& m, std::size_t dim, const char* what) {
  if (!m.is_square() || m.rows() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
}

void require_hermitian_on(const ComplexMatrix& m, std::size_t dim, const char* what) {
  require_operator_on(m, dim, what);
  if (!is_hermitian(m)) throw Error(ErrorCode::NotHermitian, std::string(what) + " is not Hermitian");
}

ComplexMatrix additive_combination(const HermitianTuple& pair) {
  const std::size_t dh = pair[0].rows(), dk = pair[1].rows();
  return tensor(pair[0], ComplexMatrix::identity(dk)) + tensor(ComplexMatrix::identity(dh), pair[1]);
}

AdditiveSpace gauge_fix(RealLinearBasis pair_space, std::size_t dh, std::size_t dk) {
  std::vector<HermitianTuple> fixed;
  for (const auto& pair : pair_space.basis) {
    const double shift = pair[1].trace().real() / static_cast<double>(dk);
    fixed.push_back({pair[0] + shift * ComplexMatrix::identity(dh),
                     pair[1] - shift * ComplexMatrix::identity(dk)});
  }
  const std::vector<std::size_t> dims{dh, dk};
  AdditiveSpace out;
  for (auto& t : orthonormal_span(dims, fixed)) out.physical.push_back({std::move(t[0]), std::move(t[1])});
  const double g = 1.0 / std::sqrt(static_cast<double>(dh + dk));
  out.gauge = {g * ComplexMatrix::identity(dh), -g * ComplexMatrix::identity(dk)};
  out.pair_space = std::move(pair_space);
  return out;
}

}  // namespace

ComplexMatrix AdditivePair::combined() const { return additive_combination({l1, l2}); }

AdditivePair make_additive_pair(ComplexMatrix l1, ComplexMatrix l2, double tol) {
  if (!is_hermitian(l1, tol)) throw Error(ErrorCode::NotHermitian, "L1 is not Hermitian");
  if (!is_hermitian(l2, tol)) throw Error(ErrorCode::NotHermitian, "L2 is not Hermitian");
  return {std::move(l1), std::move(l2)};
}

double WayBoundReport::term(std::string_view name) const {
  for (const auto& t : rhs_terms)
    if (t.name == name) return t.value;
  throw Error(ErrorCode::BadParams, "no bound term named '" + std::string(name) + "'");
}

AdditiveSpace additive_conserved_space(const ComplexMatrix& u, std::size_t system_dim,
                                       std::size_t apparatus_dim) {
  require_operator_on(u, system_dim * apparatus_dim, "coupling");
  if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "coupling is not unitary");
  const std::vector<ConstraintMap> constraints{
      [&u](const HermitianTuple& pair) { return commutator(additive_combination(pair), u); }};
  auto basis = solve_commutant("additive pairs (L1, L2) with [L1 (x) I + I (x) L2, U] = 0",
                               {system_dim, apparatus_dim}, constraints);
  return gauge_fix(std::move(basis), system_dim, apparatus_dim);
}

AdditiveSpace additive_weak_yanase_space(const NormalMeasurement& nm) {
  std::vector<ComplexMatrix> evolved;
  for (std::size_t x = 0; x < nm.pointer().size(); ++x) evolved.push_back(evolved_pointer_effect(nm, x));
  std::vector<ConstraintMap> constraints;
  for (const auto& e : evolved) {
    constraints.push_back([e](const HermitianTuple& pair) { return commutator(e, additive_combination(pair)); });
  }
  auto basis = solve_commutant("additive pairs commuting with every evolved pointer effect",
                               {nm.system_dim(), nm.apparatus_dim()}, constraints);
  return gauge_fix(std::move(basis), nm.system_dim(), nm.apparatus_dim());
}

RealLinearBasis multiplicative_weak_yanase_space(const NormalMeasurement& nm, const ComplexMatrix& l2) {
  require_hermitian_on(l2, nm.apparatus_dim(), "L2");
  std::vector<ConstraintMap> constraints;
  for (std::size_t x = 0; x < nm.pointer().size(); ++x) {
    constraints.push_back([e = evolved_pointer_effect(nm, x), l2](const HermitianTuple& t) {
      return commutator(e, tensor(t[0], l2));
    });
  }
  return solve_commutant("L1 with [U~(X), L1 (x) L2] = 0", {nm.system_dim()}, constraints);
}

ComplexMatrix restricted_quantity(const NormalMeasurement& nm, const ComplexMatrix& l) {
  require_operator_on(l, nm.system_dim() * nm.apparatus_dim(), "L");
  return nm.isometry().adjoint() * l * nm.isometry();
}

Prop1Check prop1_check(const NormalMeasurement& nm, const ComplexMatrix& l) {
  Prop1Check out;
  out.weak_yanase = weak_yanase_defect(nm, l);
  out.sharpness = sharpness_defect(nm);
  const auto e = measured_observable(nm);
  const auto restricted = restricted_quantity(nm, l);
  for (const auto& eff : e.effects()) out.conclusion = std::max(out.conclusion, commutator_norm(eff, restricted));
  return out;
}

MultiplicativeCorollary multiplicative_corollary(const NormalMeasurement& nm, const ComplexMatrix& l1,
                                                 const ComplexMatrix& l2, double tol) {
  require_hermitian_on(l1, nm.system_dim(), "L1");
  require_hermitian_on(l2, nm.apparatus_dim(), "L2");
  MultiplicativeCorollary out;
  out.probe_expectation = inner(nm.probe(), l2.apply(nm.probe()));
  out.degenerate = std::abs(out.probe_expectation) <= tol;
  const ComplexMatrix l = tensor(l1, l2);
  out.weak_yanase = weak_yanase_defect(nm, l);
  out.sharpness = sharpness_defect(nm);
  if (!out.degenerate) {
    double c = 0.0;
    const auto measured = measured_observable(nm);
    for (const auto& eff : measured.effects()) c = std::max(c, commutator_norm(eff, l1));
    out.conclusion = c;
  }
  return out;
}

WayBoundReport prop2_bound(const NormalMeasurement& nm, const ComplexMatrix& l, std::string_view outcome) {
  require_hermitian_on(l, nm.system_dim() * nm.apparatus_dim(), "L");
  const ComplexMatrix evolved = evolved_pointer_effect(nm, outcome);
  const auto& v = nm.isometry();
  const ComplexMatrix effect = v.adjoint() * evolved * v;

  WayBoundReport r;
  r.lhs = commutator_norm(effect, v.adjoint() * l * v);
  const double sharp = commutator_norm(evolved, nm.probe_projector());
  r.rhs_terms = {{"sharpness", 2.0 * sharp * operator_norm(l)}, {"weak_yanase", commutator_norm(evolved, l)}};
  r.rhs_total = r.rhs_terms[0].value + r.rhs_terms[1].value;
  r.slack = r.rhs_total - r.lhs;
  return r;
}

WayBoundReport prop3_bound(const NormalMeasurement& nm, const ComplexMatrix& l_sys, std::string_view outcome) {
  require_hermitian_on(l_sys, nm.system_dim(), "L");
  const ComplexMatrix evolved = evolved_pointer_effect(nm, outcome);
  const auto& v = nm.isometry();
  const ComplexMatrix effect = v.adjoint() * evolved * v;
  const ComplexMatrix lifted = tensor(l_sys, ComplexMatrix::identity(nm.apparatus_dim()));

  WayBoundReport r;
  r.lhs = commutator_norm(effect, l_sys);
  const double pointer_level = commutator_norm(evolved, lifted);
  const double coupling_level = 2.0 * commutator_norm(nm.coupling(), lifted);
  r.rhs_terms = {{"evolved_pointer", pointer_level}, {"coupling", coupling_level}};
  r.rhs_total = pointer_level;
  r.slack = r.rhs_total - r.lhs;
  r.chain_slack = coupling_level - pointer_level;
  return r;
}

}  // namespace waylab
