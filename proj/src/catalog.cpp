#include "waylab/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "waylab/error.hpp"

namespace waylab::catalog {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const Complex kI{0.0, 1.0};

ComplexMatrix projector(const StateVector& v) { return ComplexMatrix::outer(v, v); }

ComplexMatrix diag2(double a, double b) {
  return ComplexMatrix::from_rows({{a, 0.0}, {0.0, b}});
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

FactOutcome at_most(double value, double threshold, std::string detail = {}) {
  return {value <= threshold, value, threshold, std::move(detail)};
}

FactOutcome above(double value, double threshold, std::string detail = {}) {
  return {value > threshold, value, threshold, std::move(detail)};
}

ExpectedFact fact(std::string claim, Provenance tag, std::string checker, std::function<FactOutcome()> check) {
  return {std::move(claim), tag, std::move(checker), std::move(check)};
}

/// Distance from `t` to the span of an HS-orthonormal family of tuples.
double span_distance(const std::vector<HermitianTuple>& basis, const HermitianTuple& t) {
  HermitianTuple rest = t;
  for (const auto& b : basis) {
    double c = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) c += hs_inner(b[k], t[k]).real();
    for (std::size_t k = 0; k < t.size(); ++k) rest[k] -= Complex(c) * b[k];
  }
  double sq = 0.0;
  for (const auto& m : rest) sq += m.frobenius_norm() * m.frobenius_norm();
  return std::sqrt(sq);
}

double distance_to_scalar(const ComplexMatrix& m) {
  const double d = static_cast<double>(m.rows());
  return operator_norm(m - (m.trace() / d) * ComplexMatrix::identity(m.rows()));
}

/// The S_+-x pointer with the probe fixed; pointer sharpness defect over a direction grid.
FactOutcome genway_pointer_scan(const StateVector& probe, double step_deg) {
  double worst_on = 0.0;
  double best_off = 1e300;
  const double rad = std::numbers::pi / 180.0;
  const auto polar = static_cast<int>(std::lround(180.0 / step_deg));
  const auto azimuth = static_cast<int>(std::lround(360.0 / step_deg));
  for (int i = 0; i <= polar; ++i) {
    for (int j = 0; j < ((i == 0 || i == polar) ? 1 : azimuth); ++j) {
      const auto n = BlochVector::from_angles(i * step_deg * rad, j * step_deg * rad);
      const double sd = sharpness_defect(genway_measurement(n, probe));
      const bool on_axis = std::abs(std::abs(n[0]) - 1.0) < 1e-12;
      if (on_axis) worst_on = std::max(worst_on, sd);
      else best_off = std::min(best_off, sd);
    }
  }
  FactOutcome out;
  out.value = worst_on;
  out.threshold = kTolerance;
  out.passed = worst_on <= kTolerance && best_off > kTolerance;
  out.detail = "max defect at +-x " + fmt(worst_on) + ", min defect elsewhere " + fmt(best_off);
  return out;
}

FactOutcome sides_fact(const ComplexMatrix& u, bool system, bool apparatus) {
  const auto c = classify_sides(u, 2, 2);
  FactOutcome out;
  out.passed = c.system.realisable == system && c.apparatus.realisable == apparatus && !c.system.inconclusive &&
               !c.apparatus.inconclusive;
  out.value = system ? c.system.best_spread : c.apparatus.best_spread;
  out.threshold = 1.0;
  out.detail = std::string("system ") + (c.system.realisable ? "true" : "false") + " (spread " +
               fmt(c.system.best_spread) + "), apparatus " + (c.apparatus.realisable ? "true" : "false") +
               " (spread " + fmt(c.apparatus.best_spread) + ")";
  return out;
}

FactOutcome swap_commutes(const ComplexMatrix& u) {
  return at_most(commutator_norm(u, swap_operator(2, 2)), kTolerance);
}

/// ||Yanase defect - weak Yanase defect|| over the additive conserved space of a measurement.
FactOutcome yanase_agreement(const NormalMeasurement& nm) {
  const auto space = additive_conserved_space(nm.coupling(), nm.system_dim(), nm.apparatus_dim());
  std::vector<AdditivePair> pairs = space.physical;
  pairs.push_back(space.gauge);
  double worst = 0.0;
  for (const auto& p : pairs) {
    worst = std::max(worst, std::abs(yanase_defect(nm, p.l2) - weak_yanase_defect(nm, p.combined())));
  }
  return at_most(worst, kTolerance, std::to_string(pairs.size()) + " conserved pairs");
}

FactOutcome ozawa(const NormalMeasurement& nm) {
  const bool repeatable = is_repeatable(nm);
  FactOutcome out;
  out.passed = repeatable && repeatability_spectrum_check(nm);
  out.value = repeatable ? 1.0 : 0.0;
  out.threshold = 1.0;
  out.detail = "non-zero effects have eigenvalue 1";
  return out;
}

FactOutcome only_trivial_system_quantity(const ComplexMatrix& u, const std::optional<ComplexMatrix>& evolved) {
  std::vector<ConstraintMap> constraints;
  const ComplexMatrix id_k = ComplexMatrix::identity(2);
  if (evolved) {
    constraints.push_back([e = *evolved, id_k](const HermitianTuple& t) { return commutator(e, tensor(t[0], id_k)); });
  } else {
    constraints.push_back([u, id_k](const HermitianTuple& t) { return commutator(u, tensor(t[0], id_k)); });
  }
  const auto space = solve_commutant("L with the system-side commutation", {2}, constraints);
  double spread = 0.0;
  for (const auto& b : space.basis) spread = std::max(spread, distance_to_scalar(b[0]));
  FactOutcome out;
  out.passed = space.size() == 1 && spread <= kTolerance;
  out.value = static_cast<double>(space.size());
  out.threshold = 1.0;
  out.detail = "solution dimension " + std::to_string(space.size());
  return out;
}

FactOutcome multiplicative_class(const NormalMeasurement& nm, const ComplexMatrix& l2,
                                 const std::vector<ComplexMatrix>& expected) {
  const auto space = multiplicative_weak_yanase_space(nm, l2);
  double worst = 0.0;
  for (const auto& m : expected) worst = std::max(worst, span_distance(space.basis, {m}));
  FactOutcome out;
  out.passed = space.size() == expected.size() && worst <= 1e-9;
  out.value = worst;
  out.threshold = 1e-9;
  out.detail = "solution dimension " + std::to_string(space.size());
  return out;
}

std::vector<ExpectedFact> controlled_z_facts(const Params&) {
  std::vector<ExpectedFact> f;
  f.push_back(fact("U|1>|1> = -|1>|1>", Provenance::Trivial, "ComplexMatrix::apply", [] {
    const auto v = controlled_z().apply(tensor(ket1(), ket1()));
    return at_most(std::abs(v[3] + 1.0) + std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]), kTolerance);
  }));
  f.push_back(fact("Z = S_x with probe (|0> + |1>)/sqrt2 measures S_z", Provenance::Paper, "measured_observable", [] {
    return at_most(max_effect_distance(measured_observable(controlled_z_measurement(+1)),
                                       spin_observable(BlochVector::z_hat())),
                   kTolerance);
  }));
  f.push_back(fact("Z = S_x with probe (|0> - |1>)/sqrt2 measures S_-z", Provenance::Paper, "measured_observable", [] {
    return at_most(max_effect_distance(measured_observable(controlled_z_measurement(-1)),
                                       spin_observable(BlochVector(0.0, 0.0, -1.0))),
                   kTolerance);
  }));
  f.push_back(fact("both sharp measurements are repeatable", Provenance::Paper, "is_repeatable", [] {
    const bool ok = is_repeatable(controlled_z_measurement(+1)) && is_repeatable(controlled_z_measurement(-1));
    return FactOutcome{ok, ok ? 1.0 : 0.0, 1.0, {}};
  }));
  f.push_back(fact("(diag(a, b), 0) is an additive conserved pair", Provenance::Paper, "additive_conserved_space", [] {
    const auto space = additive_conserved_space(controlled_z(), 2, 2);
    return at_most(span_distance(space.pair_space.basis, {diag2(0.7, -1.3), ComplexMatrix::zero(2)}), 1e-9,
                   "unreduced dimension " + std::to_string(space.pair_space.size()));
  }));
  f.push_back(fact("U commutes with the SWAP gate", Provenance::Paper, "commutator_norm",
                   [] { return swap_commutes(controlled_z()); }));
  return f;
}

std::vector<ExpectedFact> genway_facts(const Params&) {
  std::vector<ExpectedFact> f;
  f.push_back(fact("U is unitary", Provenance::Paper, "is_unitary", [] {
    const auto u = genway_unitary();
    return at_most(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(4)), kTolerance);
  }));
  f.push_back(fact("sharpness defect vanishes exactly for Z = S_+-x (probe |0>, 5 degree scan)", Provenance::Paper,
                   "sharpness_defect", [] { return genway_pointer_scan(ket0(), 5.0); }));
  f.push_back(fact("sharpness defect vanishes exactly for Z = S_+-x (tilted probe, 5 degree scan)", Provenance::Paper,
                   "sharpness_defect", [] {
                     const StateVector probe{std::cos(0.4), std::polar(1.0, 1.1) * std::sin(0.4)};
                     return genway_pointer_scan(probe, 5.0);
                   }));
  f.push_back(fact("Z = S_x gives a repeatable measurement", Provenance::Paper, "is_repeatable", [] {
    return ozawa(genway_measurement(BlochVector::x_hat(), ket0()));
  }));
  f.push_back(fact("additive conserved quantities are k I (x) I only", Provenance::Paper, "additive_conserved_space",
                   [] {
                     const auto space = additive_conserved_space(genway_unitary(), 2, 2);
                     double spread = 0.0;
                     for (const auto& p : space.physical) spread = std::max(spread, distance_to_scalar(p.combined()));
                     FactOutcome out;
                     out.passed = space.physical_dim() == 1 && spread <= kTolerance;
                     out.value = static_cast<double>(space.physical_dim());
                     out.threshold = 1.0;
                     out.detail = "unreduced dimension " + std::to_string(space.pair_space.size());
                     return out;
                   }));
  f.push_back(fact("sigma_z (x) I + I (x) sigma_z satisfies the weak Yanase condition for Z = S_x", Provenance::Paper,
                   "weak_yanase_defect", [] {
                     const auto l = make_additive_pair(pauli_z(), pauli_z()).combined();
                     return at_most(weak_yanase_defect(genway_measurement(BlochVector::x_hat(), ket0()), l),
                                    kTolerance);
                   }));
  f.push_back(fact("the Yanase condition fails: [S_x, sigma_z] != 0", Provenance::Paper, "yanase_defect", [] {
    return above(yanase_defect(genway_measurement(BlochVector::x_hat(), ket0()), pauli_z()), 1e-3);
  }));
  f.push_back(fact("the measured sharp observable commutes with sigma_z", Provenance::Paper,
                   "mutual_commutation_defect", [] {
                     const auto a = measured_observable(genway_measurement(BlochVector::x_hat(), ket0()));
                     double worst = 0.0;
                     for (const auto& e : a.effects()) worst = std::max(worst, commutator_norm(e, pauli_z()));
                     return at_most(worst, 1e-9);
                   }));
  return f;
}

std::vector<ExpectedFact> swap_hadamard_facts(const Params&) {
  std::vector<ExpectedFact> f;
  const auto nm = [] { return swap_hadamard_multimeter().with_probe(ket0()); };
  f.push_back(fact("additive conserved quantities are k I (x) I only", Provenance::Paper, "additive_conserved_space",
                   [] {
                     const auto space = additive_conserved_space(swap_hadamard_unitary(), 2, 2);
                     return FactOutcome{space.physical_dim() == 1, static_cast<double>(space.physical_dim()), 1.0, {}};
                   }));
  f.push_back(fact("additive weak-Yanase quantities are trivial on the system", Provenance::Paper,
                   "additive_weak_yanase_space", [nm] {
                     const auto space = additive_weak_yanase_space(nm());
                     double worst = 0.0;
                     for (const auto& p : space.physical) worst = std::max(worst, distance_to_scalar(p.l1));
                     return at_most(worst, 1e-9, "physical dimension " + std::to_string(space.physical_dim()));
                   }));
  f.push_back(fact("diag(a, b) (x) |0><0| commutes with the evolved pointer", Provenance::Paper,
                   "multiplicative_weak_yanase_space", [nm] {
                     return multiplicative_class(nm(), projector(ket0()), {diag2(1, 0), diag2(0, 1)});
                   }));
  f.push_back(fact("[[a, b], [b, a]] (x) |1><1| commutes with the evolved pointer", Provenance::Paper,
                   "multiplicative_weak_yanase_space", [nm] {
                     return multiplicative_class(nm(), projector(ket1()), {ComplexMatrix::identity(2), pauli_x()});
                   }));
  f.push_back(fact("[U, L (x) I] = 0 only for trivial L", Provenance::Paper, "solve_commutant",
                   [] { return only_trivial_system_quantity(swap_hadamard_unitary(), std::nullopt); }));
  f.push_back(fact("[U~, L (x) I] = 0 only for trivial L", Provenance::Paper, "solve_commutant", [nm] {
    return only_trivial_system_quantity(swap_hadamard_unitary(), evolved_pointer_effect(nm(), 0));
  }));
  f.push_back(fact("the WAY bound for both multiplicative classes vanishes with probes |0> and |1>",
                   Provenance::Paper, "prop2_bound", [] {
                     const auto mm = swap_hadamard_multimeter();
                     const ComplexMatrix l_a = tensor(diag2(0.3, -1.2), projector(ket0()));
                     const ComplexMatrix l_b =
                         tensor(ComplexMatrix::from_rows({{0.4, 0.9}, {0.9, 0.4}}), projector(ket1()));
                     double worst = 0.0;
                     for (const auto& probe : {ket0(), ket1()}) {
                       const auto m = mm.with_probe(probe);
                       for (const auto* x : {"+", "-"}) {
                         worst = std::max(worst, prop2_bound(m, l_a, x).rhs_total);
                         worst = std::max(worst, prop2_bound(m, l_b, x).rhs_total);
                       }
                     }
                     return at_most(worst, 1e-9);
                   }));
  return f;
}

std::vector<ExpectedFact> u1_facts(const Params&) {
  std::vector<ExpectedFact> f;
  f.push_back(fact("non-trivial sharp observables are realisable on both sides", Provenance::Paper, "classify_sides",
                   [] { return sides_fact(controlled_z(), true, true); }));
  f.push_back(fact("U commutes with the SWAP gate", Provenance::Paper, "commutator_norm",
                   [] { return swap_commutes(controlled_z()); }));
  return f;
}

std::vector<ExpectedFact> u2_facts(const Params&) {
  std::vector<ExpectedFact> f;
  f.push_back(fact("non-trivial sharp observables are realisable on the apparatus only", Provenance::Paper,
                   "classify_sides", [] { return sides_fact(u2(), false, true); }));
  f.push_back(fact("role-swapped Z = S_z with probe |0> realises a non-trivial sharp observable on K",
                   Provenance::Paper, "apparatus_side_observable", [] {
                     const auto a = apparatus_side_observable(u2(), 2, 2, spin_observable(BlochVector::z_hat()), ket0());
                     const bool ok = is_sharp(a) && !is_trivial(a);
                     return FactOutcome{ok, nontriviality(a), 0.0, {}};
                   }));
  return f;
}

std::vector<ExpectedFact> u3_facts(const Params&) {
  std::vector<ExpectedFact> f;
  f.push_back(fact("no non-trivial sharp observable is realisable on either side", Provenance::Paper,
                   "classify_sides", [] { return sides_fact(u3(), false, false); }));
  f.push_back(fact("[U, diag(a, b) (x) I] = 0", Provenance::Paper, "commutator_norm", [] {
    return at_most(commutator_norm(u3(), tensor(diag2(0.8, -0.5), ComplexMatrix::identity(2))), kTolerance);
  }));
  f.push_back(fact("the evolved-pointer bound vanishes for L = diag(a, b)", Provenance::Paper, "prop3_bound", [] {
    const NormalMeasurement nm(2, 2, spin_observable(BlochVector::x_hat()), u3(), ket_plus());
    return at_most(prop3_bound(nm, diag2(0.8, -0.5), "+").rhs_total, kTolerance);
  }));
  f.push_back(fact("the sharpness route stays positive for L = diag(a, b) (x) I", Provenance::Paper, "prop2_bound",
                   [] {
                     const NormalMeasurement nm(2, 2, spin_observable(BlochVector::x_hat()), u3(), ket_plus());
                     const ComplexMatrix l = tensor(diag2(0.8, -0.5), ComplexMatrix::identity(2));
                     return above(prop2_bound(nm, l, "+").rhs_total, 1e-3);
                   }));
  return f;
}

std::vector<ExpectedFact> u_alpha_facts(const Params& p) {
  const double alpha = p.at("alpha");
  std::vector<ExpectedFact> f;
  f.push_back(fact("U_alpha is unitary", Provenance::Trivial, "is_unitary", [alpha] {
    const auto u = u_alpha(alpha);
    return at_most(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(4)), kTolerance);
  }));
  f.push_back(fact("U_1 commutes with diag(a, b) (x) I", Provenance::Paper, "commutator_norm", [] {
    return at_most(commutator_norm(u_alpha(1.0), tensor(diag2(1.7, 0.2), ComplexMatrix::identity(2))), kTolerance);
  }));
  f.push_back(fact("2 ||[S_m(+), S_n(+)]|| = ||m x n||", Provenance::Paper, "commutator_norm", [] {
    const std::array<std::array<double, 3>, 3> ms{{{0.3, -0.4, 0.5}, {0.0, 0.0, 1.0}, {0.6, 0.0, 0.8}}};
    const std::array<std::array<double, 3>, 3> ns{{{1.0, 0.0, 0.0}, {0.0, 0.6, 0.8}, {0.0, 0.0, -1.0}}};
    double worst = 0.0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const double lhs = 2.0 * commutator_norm(spin_observable(BlochVector(ms[i])).effect(0),
                                               spin_observable(BlochVector(ns[i])).effect(0));
      worst = std::max(worst, std::abs(lhs - euclidean_norm(cross(ms[i], ns[i]))));
    }
    return at_most(worst, 1e-12);
  }));
  if (alpha < 1.0) {
    f.push_back(fact("for alpha < 1 the commutator never vanishes", Provenance::Paper, "minimize_figure2", [alpha] {
      return above(minimize_figure2(alpha).min_bound, 1e-6);
    }));
  } else {
    f.push_back(fact("for alpha = 1 the minimised bound is 0 at n = +-z", Provenance::Paper, "minimize_figure2", [] {
      const auto s = minimize_figure2(1.0);
      FactOutcome out = at_most(s.min_bound, 1e-9);
      out.passed = out.passed && std::abs(std::abs(s.direction[2]) - 1.0) <= 1e-6;
      return out;
    }));
  }
  return f;
}

std::vector<ExpectedFact> ex3_measurement_facts(const Params& p) {
  const int sign = p.at("sign") < 0 ? -1 : +1;
  std::vector<ExpectedFact> f;
  f.push_back(fact("measures S_(sign z)", Provenance::Paper, "measured_observable", [sign] {
    return at_most(max_effect_distance(measured_observable(controlled_z_measurement(sign)),
                                       spin_observable(BlochVector(0.0, 0.0, sign))),
                   kTolerance);
  }));
  f.push_back(fact("repeatable, with eigenvalue 1 in every non-zero effect", Provenance::Paper,
                   "repeatability_spectrum_check", [sign] { return ozawa(controlled_z_measurement(sign)); }));
  f.push_back(fact("Yanase and weak Yanase defects agree on conserved pairs", Provenance::Paper,
                   "yanase_defect", [sign] { return yanase_agreement(controlled_z_measurement(sign)); }));
  return f;
}

std::vector<ExpectedFact> ex4_measurement_facts(const Params&) {
  std::vector<ExpectedFact> f;
  const auto nm = [] { return genway_measurement(BlochVector::x_hat(), ket0()); };
  f.push_back(fact("sharpness defect is zero", Provenance::Paper, "sharpness_defect",
                   [nm] { return at_most(sharpness_defect(nm()), kTolerance); }));
  f.push_back(fact("repeatable, with eigenvalue 1 in every non-zero effect", Provenance::Paper,
                   "repeatability_spectrum_check", [nm] { return ozawa(nm()); }));
  f.push_back(fact("sigma_z (x) I + I (x) sigma_z satisfies the weak Yanase condition", Provenance::Paper,
                   "weak_yanase_defect", [nm] {
                     return at_most(weak_yanase_defect(nm(), make_additive_pair(pauli_z(), pauli_z()).combined()),
                                    kTolerance);
                   }));
  f.push_back(fact("Yanase and weak Yanase defects agree on conserved pairs", Provenance::Paper, "yanase_defect",
                   [nm] { return yanase_agreement(nm()); }));
  return f;
}

std::vector<ExpectedFact> ex5_multimeter_facts(const Params&) {
  std::vector<ExpectedFact> f;
  f.push_back(fact("|0> programs S_z", Provenance::Paper, "program", [] {
    return at_most(max_effect_distance(program(swap_hadamard_multimeter(), ket0()),
                                       spin_observable(BlochVector::z_hat())),
                   kTolerance);
  }));
  f.push_back(fact("|1> programs S_x", Provenance::Paper, "program", [] {
    return at_most(max_effect_distance(program(swap_hadamard_multimeter(), ket1()),
                                       spin_observable(BlochVector::x_hat())),
                   kTolerance);
  }));
  f.push_back(fact("distinct sharp programs have orthogonal programming states", Provenance::Paper,
                   "orthogonality_audit", [] {
                     const auto a = orthogonality_audit(swap_hadamard_multimeter(), ket0(), ket1());
                     FactOutcome out = at_most(a.overlap, kTolerance);
                     out.passed = out.passed && a.distinct_sharp;
                     return out;
                   }));
  f.push_back(fact("the programming bound holds for |0> -> |1>", Provenance::Derived, "prop5_bound", [] {
    const auto mm = swap_hadamard_multimeter();
    double worst = 1e300;
    for (const auto* x : {"+", "-"})
      for (const auto* y : {"+", "-"}) worst = std::min(worst, prop5_bound(mm, ket0(), ket1(), x, y).slack);
    return FactOutcome{worst >= -kTolerance, worst, -kTolerance, "minimum slack"};
  }));
  f.push_back(fact("multimeter Yanase agreement with probe |0>", Provenance::Paper, "yanase_defect",
                   [] { return yanase_agreement(swap_hadamard_multimeter().with_probe(ket0())); }));
  return f;
}

std::vector<CatalogEntry> make_entries() {
  return {
      {"ex3-controlled-z", "unitary", "controlled sigma_z coupling I (x) |0><0| + sigma_z (x) |1><1|", {},
       controlled_z_facts},
      {"ex4-genway", "unitary", "coupling whose additive conserved quantities are all trivial", {}, genway_facts},
      {"ex5-swap-hadamard", "unitary", "SWAP (I (x) |0><0| + H (x) |1><1|)", {}, swap_hadamard_facts},
      {"u1", "unitary", "controlled sigma_z, usable on both sides", {}, u1_facts},
      {"u2", "unitary", "I (x) |0><0| + [[0, i], [1, 0]] (x) |1><1|, usable on the apparatus side only", {},
       u2_facts},
      {"u3", "unitary", "I (x) |0><0| + diag(1, i) (x) |1><1|, usable on neither side", {}, u3_facts},
      {"u-alpha", "unitary", "[[a, s], [s, -a]] (x) |0><0| + diag(1, i) (x) |1><1| with s = sqrt(1 - a^2)",
       {{"alpha", 0.9}}, u_alpha_facts},
      {"ex3-measurement", "measurement", "controlled sigma_z with Z = S_x and probe (|0> + sign |1>)/sqrt2",
       {{"sign", 1.0}}, ex3_measurement_facts},
      {"ex4-measurement", "measurement", "generic coupling with Z = S_x and probe |0>", {}, ex4_measurement_facts},
      {"ex5-multimeter", "multimeter", "<C^2, S_z, SWAP-Hadamard>", {}, ex5_multimeter_facts},
  };
}

}  // namespace

StateVector ket0() { return {1.0, 0.0}; }
StateVector ket1() { return {0.0, 1.0}; }
StateVector ket_plus(int sign) { return {kInvSqrt2, sign >= 0 ? kInvSqrt2 : -kInvSqrt2}; }

ComplexMatrix controlled_z() {
  return tensor(ComplexMatrix::identity(2), projector(ket0())) + tensor(pauli_z(), projector(ket1()));
}

ComplexMatrix genway_unitary() {
  const Complex i = kI;
  return kInvSqrt2 * ComplexMatrix::from_rows({{i, 0.0, 0.0, 1.0},
                                               {i, 0.0, 0.0, -1.0},
                                               {0.0, i, 1.0, 0.0},
                                               {0.0, i, -1.0, 0.0}});
}

ComplexMatrix swap_hadamard_unitary() {
  const ComplexMatrix h = kInvSqrt2 * ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, -1.0}});
  return swap_operator(2, 2) *
         (tensor(ComplexMatrix::identity(2), projector(ket0())) + tensor(h, projector(ket1())));
}

ComplexMatrix u2() {
  const ComplexMatrix m = ComplexMatrix::from_rows({{0.0, kI}, {1.0, 0.0}});
  return tensor(ComplexMatrix::identity(2), projector(ket0())) + tensor(m, projector(ket1()));
}

ComplexMatrix u3() {
  const ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, kI}});
  return tensor(ComplexMatrix::identity(2), projector(ket0())) + tensor(m, projector(ket1()));
}

NormalMeasurement controlled_z_measurement(int sign) {
  return NormalMeasurement(2, 2, spin_observable(BlochVector::x_hat()), controlled_z(), ket_plus(sign));
}

NormalMeasurement genway_measurement(const BlochVector& pointer_direction, const StateVector& probe) {
  return NormalMeasurement(2, 2, spin_observable(pointer_direction), genway_unitary(), probe);
}

Multimeter swap_hadamard_multimeter() {
  return Multimeter(2, 2, spin_observable(BlochVector::z_hat()), swap_hadamard_unitary());
}

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Trivial: return "TRIVIAL";
    case Provenance::Derived: return "DERIVED";
  }
  return "?";
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = make_entries();
  return all;
}

const CatalogEntry& entry(std::string_view id) {
  for (const auto& e : entries())
    if (e.id == id) return e;
  throw Error(ErrorCode::UnknownId, "unknown catalog id '" + std::string(id) + "'");
}

Params resolve_params(const CatalogEntry& e, const Params& overrides) {
  Params out = e.params;
  for (const auto& [name, value] : overrides) {
    if (!out.contains(name)) {
      throw Error(ErrorCode::BadParams, "'" + e.id + "' has no parameter '" + name + "'");
    }
    if (!std::isfinite(value)) throw Error(ErrorCode::BadParams, "parameter '" + name + "' is not finite");
    out[name] = value;
  }
  if (out.contains("alpha") && (out["alpha"] < 0.0 || out["alpha"] > 1.0)) {
    throw Error(ErrorCode::BadParams, "alpha must lie in [0, 1]");
  }
  if (out.contains("sign") && std::abs(out["sign"]) != 1.0) {
    throw Error(ErrorCode::BadParams, "sign must be +1 or -1");
  }
  return out;
}

Built build(std::string_view id, const Params& params) {
  const auto& e = entry(id);
  const Params p = resolve_params(e, params);
  if (id == "ex3-controlled-z" || id == "u1") return controlled_z();
  if (id == "ex4-genway") return genway_unitary();
  if (id == "ex5-swap-hadamard") return swap_hadamard_unitary();
  if (id == "u2") return u2();
  if (id == "u3") return u3();
  if (id == "u-alpha") return u_alpha(p.at("alpha"));
  if (id == "ex3-measurement") return controlled_z_measurement(p.at("sign") < 0 ? -1 : +1);
  if (id == "ex4-measurement") return genway_measurement(BlochVector::x_hat(), ket0());
  return swap_hadamard_multimeter();
}

}  // namespace waylab::catalog
