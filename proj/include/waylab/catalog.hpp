#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "waylab/measurement.hpp"
#include "waylab/multimeter.hpp"
#include "waylab/way.hpp"

namespace waylab::catalog {

// Fixed objects. Tensor order is always system (x) apparatus.
StateVector ket0();
StateVector ket1();
/// (|0> + sign |1>)/sqrt2
StateVector ket_plus(int sign = +1);

/// I (x) |0><0| + sigma_z (x) |1><1| (also called U1).
ComplexMatrix controlled_z();
/// The 4x4 coupling with only trivial additive conserved quantities.
ComplexMatrix genway_unitary();
/// SWAP (I (x) |0><0| + Hadamard (x) |1><1|).
ComplexMatrix swap_hadamard_unitary();
/// I (x) |0><0| + [[0, i], [1, 0]] (x) |1><1|.
ComplexMatrix u2();
/// I (x) |0><0| + diag(1, i) (x) |1><1|.
ComplexMatrix u3();

/// Controlled-Z coupling, Z = S_x, probe (|0> + sign|1>)/sqrt2.
NormalMeasurement controlled_z_measurement(int sign = +1);
NormalMeasurement genway_measurement(const BlochVector& pointer_direction, const StateVector& probe);
/// <C^2, S_z, SWAP-Hadamard>.
Multimeter swap_hadamard_multimeter();

enum class Provenance { Paper, Trivial, Derived };
const char* to_string(Provenance p) noexcept;

struct FactOutcome {
  bool passed = false;
  double value = 0.0;      // the measured quantity
  double threshold = 0.0;  // what it was compared against
  std::string detail;
};

struct ExpectedFact {
  std::string claim;
  Provenance tag;
  std::string checker;  // operation that decides the fact
  std::function<FactOutcome()> check;
};

using Params = std::map<std::string, double>;

struct CatalogEntry {
  std::string id;
  std::string kind;  // "unitary", "measurement" or "multimeter"
  std::string description;
  Params params;     // defaults
  std::function<std::vector<ExpectedFact>(const Params&)> facts;
};

const std::vector<CatalogEntry>& entries();
/// Throws UnknownId.
const CatalogEntry& entry(std::string_view id);

using Built = std::variant<ComplexMatrix, NormalMeasurement, Multimeter>;

/// Throws UnknownId, or BadParams (unknown parameter, alpha outside [0, 1]).
Built build(std::string_view id, const Params& params = {});

/// Merge user params over the entry defaults, rejecting unknown names.
Params resolve_params(const CatalogEntry& e, const Params& overrides);

// ---------------------------------------------------------------------------
// One- and two-sided realisability of non-trivial sharp observables.

struct ClassifyOptions {
  double pointer_step_deg = 1.0;
  double probe_step_deg = 2.0;
  /// A side counts as realising a non-trivial sharp observable when the best
  /// spectral spread lambda_max - lambda_min of E(+) reaches 1 - this.
  double sharp_gap = 1e-6;
  /// Grid best below 1 - this is a confident "no".
  double grid_gap = 1e-3;
};

struct SideResult {
  bool realisable = false;
  double best_spread = 0.0;  // after refinement; 1 means a non-trivial PVM
  double grid_spread = 0.0;
  bool inconclusive = false;  // refined gap between sharp_gap and grid_gap
  std::array<double, 3> pointer{0.0, 0.0, 1.0};
  StateVector probe;
};

struct SideClassification {
  SideResult system;
  SideResult apparatus;
};

/// Observable realised on the apparatus K when the roles are swapped: pointer
/// on H, probe in H, defined by tr[A(X) xi] = tr[(Z(X) (x) I) U (|phi><phi| (x) xi) U*].
DiscreteObservable apparatus_side_observable(const ComplexMatrix& u, std::size_t system_dim,
                                             std::size_t apparatus_dim, const DiscreteObservable& pointer,
                                             std::span<const Complex> probe);

/// Qubit-qubit couplings only (BadParams otherwise); throws NotUnitary.
SideClassification classify_sides(const ComplexMatrix& u, std::size_t system_dim, std::size_t apparatus_dim,
                                  const ClassifyOptions& options = {});

}  // namespace waylab::catalog
