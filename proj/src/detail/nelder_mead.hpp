#pragma once

#include <functional>
#include <span>
#include <vector>

namespace waylab::detail {

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Downhill simplex with the usual coefficients (1, 2, 1/2, 1/2). Stops when
/// the simplex diameter drops below `tolerance` or after `max_iterations`.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const double> step,
                             double tolerance, int max_iterations = 5000);

/// Repeated Nelder-Mead restarts from the incumbent until a restart stops
/// improving it. Escapes the stalls that a single simplex suffers on kinks.
NelderMeadResult nelder_mead_restarts(const Objective& f, std::vector<double> start,
                                      std::span<const double> step, double tolerance,
                                      int max_restarts = 12);

}  // namespace waylab::detail
