#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "waylab/measurement.hpp"
#include "waylab/numerics.hpp"

namespace waylab {

/// Candidate (L1, L2) for the additive quantity L1 (x) I + I (x) L2.
struct AdditivePair {
  ComplexMatrix l1;  // on H
  ComplexMatrix l2;  // on K

  /// L1 (x) I + I (x) L2.
  ComplexMatrix combined() const;
};

/// Throws NotHermitian when either factor is not Hermitian.
AdditivePair make_additive_pair(ComplexMatrix l1, ComplexMatrix l2, double tol = kTolerance);

/// Solution space of an additive commutation problem. The map
/// (L1, L2) |-> L1 (x) I + I (x) L2 has kernel spanned by (I, -I); `pair_space`
/// is the unreduced kernel, `physical` the gauge-fixed representatives with
/// tr(L2) = 0, orthonormal in the pair inner product.
struct AdditiveSpace {
  RealLinearBasis pair_space;
  std::vector<AdditivePair> physical;
  AdditivePair gauge;  // (I, -I) normalised

  std::size_t physical_dim() const noexcept { return physical.size(); }
};

/// Additive pairs with [L1 (x) I + I (x) L2, U] = 0. Throws NotUnitary.
AdditiveSpace additive_conserved_space(const ComplexMatrix& u, std::size_t system_dim,
                                       std::size_t apparatus_dim);

/// Additive pairs commuting with every evolved pointer effect.
AdditiveSpace additive_weak_yanase_space(const NormalMeasurement& nm);

/// Hermitian L1 with [U*(I(x)Z(X))U, L1 (x) L2] = 0 for all X.
RealLinearBasis multiplicative_weak_yanase_space(const NormalMeasurement& nm, const ComplexMatrix& l2);

/// V* L V on the system space.
ComplexMatrix restricted_quantity(const NormalMeasurement& nm, const ComplexMatrix& l);

struct Prop1Check {
  double weak_yanase = 0.0;
  double sharpness = 0.0;
  /// max_X ||[E(X), V* L V]||
  double conclusion = 0.0;
};

/// Compatibility inheritance: small weak-Yanase and sharpness defects force a
/// small conclusion defect.
Prop1Check prop1_check(const NormalMeasurement& nm, const ComplexMatrix& l);

struct MultiplicativeCorollary {
  Complex probe_expectation;  // <phi|L2 phi>
  bool degenerate = false;    // |<phi|L2 phi>| <= tol: no conclusion on L1
  double weak_yanase = 0.0;
  double sharpness = 0.0;
  std::optional<double> conclusion;  // max_X ||[E(X), L1]|| when not degenerate
};

MultiplicativeCorollary multiplicative_corollary(const NormalMeasurement& nm, const ComplexMatrix& l1,
                                                 const ComplexMatrix& l2, double tol = kTolerance);

struct BoundTerm {
  std::string name;
  double value = 0.0;
};

struct WayBoundReport {
  double lhs = 0.0;
  std::vector<BoundTerm> rhs_terms;
  double rhs_total = 0.0;
  double slack = 0.0;  // rhs_total - lhs
  /// For chained bounds: second level minus first level.
  std::optional<double> chain_slack;

  double term(std::string_view name) const;
};

/// ||[E(X), V*LV]|| <= 2 ||[U~(X), VV*]|| ||L|| + ||[U~(X), L]||.
WayBoundReport prop2_bound(const NormalMeasurement& nm, const ComplexMatrix& l, std::string_view outcome);

/// ||[E(X), L]|| <= ||[U~(X), L (x) I]|| <= 2 ||[U, L (x) I]||. rhs_total is
/// the first level; chain_slack checks the second inequality.
WayBoundReport prop3_bound(const NormalMeasurement& nm, const ComplexMatrix& l_sys, std::string_view outcome);

// ---------------------------------------------------------------------------
// Qubit coupling family U_alpha and the minimised commutator bound.

/// U_alpha = [[a, s], [s, -a]] (x) |0><0| + diag(1, i) (x) |1><1|, s = sqrt(1 - a^2).
/// Throws BadParams for alpha outside [0, 1].
ComplexMatrix u_alpha(double alpha);

/// 4 ||[U_alpha, S_n(+) (x) I]|| for unit n.
double figure2_objective(double alpha, const std::array<double, 3>& n);

struct SphereSearchOptions {
  std::size_t polar_cells = 64;     // over the closed upper half-sphere
  std::size_t azimuth_cells = 128;
  std::size_t refine_from = 5;
  double simplex_tolerance = 1e-7;
  std::size_t threads = 0;          // 0 = hardware concurrency
};

struct ScanPoint {
  double alpha = 0.0;
  double min_bound = 0.0;
  std::array<double, 3> direction{0.0, 0.0, 1.0};  // canonical: z >= 0
};

ScanPoint minimize_figure2(double alpha, const SphereSearchOptions& options = {});

/// One ScanPoint per alpha, in input order.
std::vector<ScanPoint> figure2_scan(std::span<const double> alphas, const SphereSearchOptions& options = {});

/// Evenly spaced grid including both endpoints.
std::vector<double> linear_grid(double lo, double hi, std::size_t steps);

struct EffectRegion {
  double alpha = 0.0;
  double min_bound = 0.0;
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  std::size_t grid = 0;
  /// xz-plane samples (x, z) inside the realisable set.
  std::vector<std::pair<double, double>> points;
};

/// xz cross-section of {m : ||m|| <= 1, ||m x n*|| <= min_bound} on a
/// grid x grid lattice over [-1, 1]^2.
EffectRegion realisable_effect_region(double alpha, std::size_t grid = 401,
                                      const SphereSearchOptions& options = {});
EffectRegion effect_region_from_scan(const ScanPoint& point, std::size_t grid = 401);

}  // namespace waylab
