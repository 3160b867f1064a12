#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "detail/nelder_mead.hpp"
#include "waylab/error.hpp"
#include "waylab/observables.hpp"
#include "waylab/way.hpp"

namespace waylab {

namespace {

std::array<double, 3> direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

std::array<double, 3> canonical(std::array<double, 3> n) {
  const double len = euclidean_norm(n);
  for (auto& c : n) c /= len;
  const bool flip = n[2] < 0.0 || (n[2] == 0.0 && (n[0] < 0.0 || (n[0] == 0.0 && n[1] < 0.0)));
  if (flip)
    for (auto& c : n) c = -c;
  return n;
}

struct Cell {
  double value;
  double theta;
  double phi;
};

}  // namespace

ComplexMatrix u_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::BadParams, "alpha must lie in [0, 1]");
  }
  const double s = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  const ComplexMatrix reflection = ComplexMatrix::from_rows({{alpha, s}, {s, -alpha}});
  const ComplexMatrix phase = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, Complex(0.0, 1.0)}});
  const ComplexMatrix p0 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
  const ComplexMatrix p1 = ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
  return tensor(reflection, p0) + tensor(phase, p1);
}

double figure2_objective(double alpha, const std::array<double, 3>& n) {
  const ComplexMatrix u = u_alpha(alpha);
  const ComplexMatrix effect = 0.5 * (ComplexMatrix::identity(2) + BlochVector(n, 1e-6).dot_sigma());
  return 4.0 * commutator_norm(u, tensor(effect, ComplexMatrix::identity(2)));
}

ScanPoint minimize_figure2(double alpha, const SphereSearchOptions& options) {
  if (options.polar_cells < 2 || options.azimuth_cells < 1) {
    throw Error(ErrorCode::BadParams, "sphere grid is too coarse");
  }
  const ComplexMatrix u = u_alpha(alpha);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  auto objective = [&](double theta, double phi) {
    const auto n = direction(theta, phi);
    const ComplexMatrix effect = 0.5 * (id + BlochVector(n, 1e-6).dot_sigma());
    return 4.0 * commutator_norm(u, tensor(effect, id));
  };

  // ||[U, S_n]|| = ||[U, S_-n]||, so the closed upper half-sphere suffices.
  const double dtheta = 0.5 * std::numbers::pi / static_cast<double>(options.polar_cells - 1);
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(options.azimuth_cells);
  std::vector<Cell> cells;
  cells.reserve(options.polar_cells * options.azimuth_cells);
  for (std::size_t i = 0; i < options.polar_cells; ++i) {
    const double theta = dtheta * static_cast<double>(i);
    // The pole is a single point.
    const std::size_t nphi = i == 0 ? 1 : options.azimuth_cells;
    for (std::size_t j = 0; j < nphi; ++j) {
      const double phi = dphi * static_cast<double>(j);
      cells.push_back({objective(theta, phi), theta, phi});
    }
  }
  const std::size_t keep = std::min(options.refine_from, cells.size());
  std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(keep), cells.end(),
                    [](const Cell& a, const Cell& b) {
                      if (a.value != b.value) return a.value < b.value;
                      if (a.theta != b.theta) return a.theta < b.theta;
                      return a.phi < b.phi;
                    });

  ScanPoint best{alpha, cells.front().value, canonical(direction(cells.front().theta, cells.front().phi))};
  const detail::Objective f = [&](std::span<const double> x) { return objective(x[0], x[1]); };
  const std::array<double, 2> step{dtheta, dphi};
  for (std::size_t c = 0; c < keep; ++c) {
    const auto r = detail::nelder_mead_restarts(f, {cells[c].theta, cells[c].phi}, step,
                                                options.simplex_tolerance);
    if (r.value < best.min_bound) {
      best.min_bound = r.value;
      best.direction = canonical(direction(r.x[0], r.x[1]));
    }
  }
  return best;
}

std::vector<ScanPoint> figure2_scan(std::span<const double> alphas, const SphereSearchOptions& options) {
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) throw Error(ErrorCode::BadParams, "alpha grid values must lie in [0, 1]");
  }
  std::vector<ScanPoint> out(alphas.size());
  std::size_t threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, alphas.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < alphas.size(); ++i) out[i] = minimize_figure2(alphas[i], options);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < alphas.size(); i = next++) out[i] = minimize_figure2(alphas[i], options);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t steps) {
  if (steps == 0) return {};
  if (steps == 1) return {lo};
  std::vector<double> g(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    g[i] = i + 1 == steps ? hi : lo + (hi - lo) * t;
  }
  return g;
}

EffectRegion effect_region_from_scan(const ScanPoint& point, std::size_t grid) {
  if (grid < 2) throw Error(ErrorCode::BadParams, "region grid needs at least two samples per axis");
  EffectRegion r;
  r.alpha = point.alpha;
  r.min_bound = point.min_bound;
  r.axis = point.direction;
  r.grid = grid;
  const double span = static_cast<double>(grid - 1);
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = (2.0 * static_cast<double>(i) - span) / span;
    for (std::size_t k = 0; k < grid; ++k) {
      const double z = (2.0 * static_cast<double>(k) - span) / span;
      if (x * x + z * z > 1.0) continue;
      if (euclidean_norm(cross({x, 0.0, z}, r.axis)) <= r.min_bound + 1e-12) r.points.emplace_back(x, z);
    }
  }
  return r;
}

EffectRegion realisable_effect_region(double alpha, std::size_t grid, const SphereSearchOptions& options) {
  return effect_region_from_scan(minimize_figure2(alpha, options), grid);
}

}  // namespace waylab
