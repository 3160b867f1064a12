#include "detail/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace waylab::detail {

namespace {

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const double> step,
                             double tolerance, int max_iterations) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step[i];
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  NelderMeadResult result;
  int it = 0;
  for (; it < max_iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    const auto best = order.front(), worst = order.back(), second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i) diameter = std::max(diameter, distance(simplex[i], simplex[best]));
    if (diameter < tolerance) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
    }
    auto along = [&](double t, std::vector<double>& out) {
      for (std::size_t k = 0; k < n; ++k) out[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
    };

    along(-1.0, trial);
    const double fr = f(trial);
    if (fr < values[best]) {
      along(-2.0, trial2);
      const double fe = f(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    // Contraction, outside or inside.
    const bool outside = fr < values[worst];
    along(outside ? -0.5 : 0.5, trial2);
    const double fc = f(trial2);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = trial2;
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
      values[i] = f(simplex[i]);
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  result.x = simplex[best];
  result.value = values[best];
  result.iterations = it;
  return result;
}

NelderMeadResult nelder_mead_restarts(const Objective& f, std::vector<double> start,
                                      std::span<const double> step, double tolerance, int max_restarts) {
  NelderMeadResult best = nelder_mead(f, std::move(start), step, tolerance);
  std::vector<double> restart_step(step.begin(), step.end());
  for (int r = 0; r < max_restarts; ++r) {
    for (auto& s : restart_step) s *= 0.5;
    auto next = nelder_mead(f, best.x, restart_step, tolerance);
    next.iterations += best.iterations;
    const bool improved = next.value < best.value - 1e-15 * std::max(1.0, std::abs(best.value));
    if (next.value <= best.value) best = std::move(next);
    if (!improved) break;
  }
  return best;
}

}  // namespace waylab::detail
