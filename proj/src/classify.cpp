#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail/linalg.hpp"
#include "detail/nelder_mead.hpp"
#include "waylab/catalog.hpp"
#include "waylab/error.hpp"

namespace waylab::catalog {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

enum class Side { System, Apparatus };

StateVector qubit_state(double theta, double phi) {
  return {std::cos(0.5 * theta), std::polar(1.0, phi) * std::sin(0.5 * theta)};
}

/// W embeds the measured space into H (x) K next to the fixed probe.
ComplexMatrix side_embedding(Side side, std::size_t dh, std::size_t dk, std::span<const Complex> probe) {
  if (side == Side::System) return probe_isometry(dh, probe);
  ComplexMatrix w(dh * dk, dk);
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t a = 0; a < dk; ++a) w(i * dk + a, a) = probe[i];
  return w;
}

ComplexMatrix pointer_lift(Side side, const ComplexMatrix& z, std::size_t dh, std::size_t dk) {
  return side == Side::System ? tensor(ComplexMatrix::identity(dh), z) : tensor(z, ComplexMatrix::identity(dk));
}

/// E(+) = (I + sum_k z_k M_k)/2 with M_k = W* U* lift(sigma_k) U W. Returns the
/// Bloch part: column k holds the sigma-coordinates of M_k.
std::array<std::array<double, 3>, 3> bloch_response(Side side, const ComplexMatrix& u,
                                                    std::span<const Complex> probe) {
  const ComplexMatrix w = side_embedding(side, 2, 2, probe);
  const ComplexMatrix uw = u * w;
  const ComplexMatrix uw_adj = uw.adjoint();
  const std::array<ComplexMatrix, 3> paulis{pauli_x(), pauli_y(), pauli_z()};
  std::array<std::array<double, 3>, 3> b{};
  for (std::size_t k = 0; k < 3; ++k) {
    const ComplexMatrix m = uw_adj * pointer_lift(side, paulis[k], 2, 2) * uw;
    for (std::size_t j = 0; j < 3; ++j) b[j][k] = 0.5 * (m * paulis[j]).trace().real();
  }
  return b;
}

DiscreteObservable side_observable(Side side, const ComplexMatrix& u, const DiscreteObservable& pointer,
                                   std::span<const Complex> probe) {
  if (side == Side::System) {
    return measured_observable(NormalMeasurement(2, 2, pointer, u, StateVector(probe.begin(), probe.end())));
  }
  return apparatus_side_observable(u, 2, 2, pointer, probe);
}

double exact_spread(Side side, const ComplexMatrix& u, const std::array<double, 3>& z, std::span<const Complex> probe) {
  const auto obs = side_observable(side, u, spin_observable(BlochVector(z, 1e-6)), probe);
  const auto values = detail::hermitian_part_eigenvalues(obs.effect(0));
  return values.back() - values.front();
}

std::array<double, 3> direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

SideResult search_side(Side side, const ComplexMatrix& u, const ClassifyOptions& options) {
  // Pointer directions: S_z and S_-z give the same PVM, so a half-sphere suffices.
  std::vector<std::array<double, 3>> pointers;
  std::vector<std::pair<double, double>> pointer_angles;
  const auto polar_steps = static_cast<std::size_t>(std::lround(90.0 / options.pointer_step_deg));
  const auto azimuth_steps = static_cast<std::size_t>(std::lround(360.0 / options.pointer_step_deg));
  for (std::size_t i = 0; i <= polar_steps; ++i) {
    const double theta = static_cast<double>(i) * options.pointer_step_deg * kDeg;
    const std::size_t nphi = i == 0 ? 1 : azimuth_steps;
    for (std::size_t j = 0; j < nphi; ++j) {
      const double phi = static_cast<double>(j) * options.pointer_step_deg * kDeg;
      const auto d = direction(theta, phi);
      pointers.push_back(d);
      pointer_angles.emplace_back(theta, phi);
    }
  }

  const auto probe_polar = static_cast<std::size_t>(std::lround(180.0 / options.probe_step_deg));
  const auto probe_azimuth = static_cast<std::size_t>(std::lround(360.0 / options.probe_step_deg));
  double best = -1.0;
  std::size_t best_pointer = 0;
  std::pair<double, double> best_probe{0.0, 0.0};
  for (std::size_t i = 0; i <= probe_polar; ++i) {
    const double theta = static_cast<double>(i) * options.probe_step_deg * kDeg;
    const std::size_t nphi = (i == 0 || i == probe_polar) ? 1 : probe_azimuth;
    for (std::size_t j = 0; j < nphi; ++j) {
      const double phi = static_cast<double>(j) * options.probe_step_deg * kDeg;
      const auto b = bloch_response(side, u, qubit_state(theta, phi));
      for (std::size_t p = 0; p < pointers.size(); ++p) {
        const auto& z = pointers[p];
        double s2 = 0.0;
        for (std::size_t r = 0; r < 3; ++r) {
          const double v = b[r][0] * z[0] + b[r][1] * z[1] + b[r][2] * z[2];
          s2 += v * v;
        }
        if (s2 > best) {
          best = s2;
          best_pointer = p;
          best_probe = {theta, phi};
        }
      }
    }
  }

  SideResult result;
  result.grid_spread = std::sqrt(std::max(best, 0.0));
  result.best_spread = result.grid_spread;
  result.pointer = direction(pointer_angles[best_pointer].first, pointer_angles[best_pointer].second);
  result.probe = qubit_state(best_probe.first, best_probe.second);

  const detail::Objective f = [&](std::span<const double> x) {
    return -exact_spread(side, u, direction(x[0], x[1]), qubit_state(x[2], x[3]));
  };
  const std::array<double, 4> step{options.pointer_step_deg * kDeg, options.pointer_step_deg * kDeg,
                                   options.probe_step_deg * kDeg, options.probe_step_deg * kDeg};
  const auto refined = detail::nelder_mead_restarts(
      f, {pointer_angles[best_pointer].first, pointer_angles[best_pointer].second, best_probe.first, best_probe.second},
      step, 1e-9);
  // Compare the exact spread at both candidates; the grid value is from the affine model.
  const double grid_exact = exact_spread(side, u, result.pointer, result.probe);
  result.best_spread = grid_exact;
  if (-refined.value > grid_exact) {
    result.best_spread = -refined.value;
    result.pointer = direction(refined.x[0], refined.x[1]);
    result.probe = qubit_state(refined.x[2], refined.x[3]);
  }
  result.realisable = result.best_spread >= 1.0 - options.sharp_gap;
  result.inconclusive = !result.realisable && result.best_spread >= 1.0 - options.grid_gap;
  return result;
}

}  // namespace

DiscreteObservable apparatus_side_observable(const ComplexMatrix& u, std::size_t system_dim,
                                             std::size_t apparatus_dim, const DiscreteObservable& pointer,
                                             std::span<const Complex> probe) {
  if (!u.is_square() || u.rows() != system_dim * apparatus_dim) {
    throw Error(ErrorCode::DimensionMismatch, "coupling dimension differs from system_dim * apparatus_dim");
  }
  if (pointer.space_dim() != system_dim) {
    throw Error(ErrorCode::DimensionMismatch, "role-swapped pointer must act on the system space");
  }
  if (probe.size() != system_dim || std::abs(norm(probe) - 1.0) > kTolerance) {
    throw Error(ErrorCode::InvalidState, "role-swapped probe must be a unit vector in the system space");
  }
  const ComplexMatrix w = side_embedding(Side::Apparatus, system_dim, apparatus_dim, probe);
  const ComplexMatrix uw = u * w;
  std::vector<ComplexMatrix> effects;
  for (const auto& z : pointer.effects()) {
    ComplexMatrix e = uw.adjoint() * tensor(z, ComplexMatrix::identity(apparatus_dim)) * uw;
    effects.push_back(0.5 * (e + e.adjoint()));
  }
  return DiscreteObservable(pointer.outcomes(), std::move(effects));
}

SideClassification classify_sides(const ComplexMatrix& u, std::size_t system_dim, std::size_t apparatus_dim,
                                  const ClassifyOptions& options) {
  if (system_dim != 2 || apparatus_dim != 2) {
    throw Error(ErrorCode::BadParams, "classify_sides supports qubit system and qubit apparatus only");
  }
  if (!u.is_square() || u.rows() != 4) throw Error(ErrorCode::DimensionMismatch, "coupling must be 4x4");
  if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "coupling is not unitary");
  if (!(options.pointer_step_deg > 0.0) || !(options.probe_step_deg > 0.0)) {
    throw Error(ErrorCode::BadParams, "grid steps must be positive");
  }
  return {search_side(Side::System, u, options), search_side(Side::Apparatus, u, options)};
}

}  // namespace waylab::catalog
