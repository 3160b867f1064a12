#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oracle {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (std::size_t r = 0; r < ar * br; ++r)
    for (std::size_t c = 0; c < ac * bc; ++c) out(r, c) = a(r / br, c / bc) * b(r % br, c % bc);
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto ab = multiply(a, b), ba = multiply(b, a);
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ab(i, j) - ba(i, j);
  return out;
}

double spectral_norm(const ComplexMatrix& a) {
  const std::size_t n = a.cols();
  if (n == 0) return 0.0;
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = Complex(1.0 + 0.37 * i, 0.11 * (i % 3) - 0.05);
  double estimate = 0.0;
  for (int it = 0; it < 5000; ++it) {
    std::vector<Complex> y(a.rows(), 0.0), z(n, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < n; ++k) y[i] += a(i, k) * x[k];
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < a.rows(); ++i) z[k] += std::conj(a(i, k)) * y[i];
    double zn = 0.0, yn = 0.0;
    for (const auto& v : z) zn += std::norm(v);
    for (const auto& v : y) yn += std::norm(v);
    zn = std::sqrt(zn);
    if (zn == 0.0) return 0.0;
    const double next = std::sqrt(yn);  // ||A x|| with ||x|| = 1
    for (std::size_t k = 0; k < n; ++k) x[k] = z[k] / zn;
    if (it > 50 && std::abs(next - estimate) <= 1e-16 * std::max(1.0, next)) return next;
    estimate = next;
  }
  return estimate;
}

std::array<double, 3> hermitian3_eigenvalues(const ComplexMatrix& a) {
  const double a00 = a(0, 0).real(), a11 = a(1, 1).real(), a22 = a(2, 2).real();
  const double tr = a00 + a11 + a22;
  const double minors = a00 * a11 - std::norm(a(0, 1)) + a00 * a22 - std::norm(a(0, 2)) + a11 * a22 -
                        std::norm(a(1, 2));
  const double det = (a00 * (a11 * a22 - std::norm(a(1, 2))) -
                      (a(0, 1) * (a(1, 0) * a22 - a(1, 2) * a(2, 0))).real() +
                      (a(0, 2) * (a(1, 0) * a(2, 1) - a11 * a(2, 0))).real());
  // p(x) = x^3 - tr x^2 + minors x - det
  const auto p = [&](double x) { return ((x - tr) * x + minors) * x - det; };
  const double disc = tr * tr - 3.0 * minors;
  if (disc <= 0.0) return {tr / 3.0, tr / 3.0, tr / 3.0};
  const double c1 = (tr - std::sqrt(disc)) / 3.0, c2 = (tr + std::sqrt(disc)) / 3.0;
  double bound = 1.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) bound += std::abs(a(i, j));
  const auto root = [&](double lo, double hi) {
    double flo = p(lo);
    if (flo == 0.0) return lo;
    if ((flo < 0.0) == (p(hi) < 0.0)) return std::abs(p(lo)) < std::abs(p(hi)) ? lo : hi;
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const double fm = p(mid);
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  return {root(-bound, c1), root(c1, c2), root(c2, bound)};
}

std::size_t rank(const ComplexMatrix& input, double tol) {
  ComplexMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  if (scale == 0.0) return 0;
  std::size_t r = 0;
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  while (r < std::min(m, n)) {
    std::size_t pi = r, pj = r;
    double best = 0.0;
    for (std::size_t i = r; i < m; ++i)
      for (std::size_t j = r; j < n; ++j)
        if (std::abs(a(i, cols[j])) > best) best = std::abs(a(i, cols[j])), pi = i, pj = j;
    if (best <= tol * scale) break;
    std::swap(cols[r], cols[pj]);
    for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(pi, j));
    for (std::size_t i = r + 1; i < m; ++i) {
      const Complex f = a(i, cols[r]) / a(r, cols[r]);
      for (std::size_t j = r; j < n; ++j) a(i, cols[j]) -= f * a(r, cols[j]);
    }
    ++r;
  }
  return r;
}

double norm2x2(Complex a, Complex b, Complex c, Complex d) {
  // Largest eigenvalue of M M* = [[p, r], [conj r, q]].
  const double p = std::norm(a) + std::norm(b), q = std::norm(c) + std::norm(d);
  const double r = std::abs(a * std::conj(c) + b * std::conj(d));
  return std::sqrt(0.5 * (p + q + std::hypot(p - q, 2.0 * r)));
}

double figure2_block_objective(double alpha, const std::array<double, 3>& n) {
  const double s = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  // P = S_n(+) as a 2x2 array.
  const Complex p00 = 0.5 * (1.0 + n[2]), p11 = 0.5 * (1.0 - n[2]);
  const Complex p01 = 0.5 * Complex(n[0], -n[1]), p10 = std::conj(p01);
  const auto comm = [&](Complex m00, Complex m01, Complex m10, Complex m11) {
    const Complex c00 = m00 * p00 + m01 * p10 - (p00 * m00 + p01 * m10);
    const Complex c01 = m00 * p01 + m01 * p11 - (p00 * m01 + p01 * m11);
    const Complex c10 = m10 * p00 + m11 * p10 - (p10 * m00 + p11 * m10);
    const Complex c11 = m10 * p01 + m11 * p11 - (p10 * m01 + p11 * m11);
    return norm2x2(c00, c01, c10, c11);
  };
  const double first = comm(alpha, s, s, -alpha);
  const double second = comm(1.0, 0.0, 0.0, Complex(0.0, 1.0));
  return 4.0 * std::max(first, second);
}

SphereMin figure2_grid_minimum(double alpha) {
  constexpr double deg = std::numbers::pi / 180.0;
  const auto dir = [](double t, double p) {
    return std::array<double, 3>{std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
  };
  double best = 1e300, bt = 0.0, bp = 0.0;
  for (int i = 0; i <= 180; ++i)
    for (int j = 0; j < 360; ++j) {
      const double v = figure2_block_objective(alpha, dir(i * deg, j * deg));
      if (v < best) best = v, bt = i * deg, bp = j * deg;
    }
  // Nested golden-section search in a chart that puts the best grid direction on its equator.
  const auto golden = [](double lo, double hi, const auto& f) {
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - r * (hi - lo), b = lo + r * (hi - lo), fa = f(a), fb = f(b);
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
      if (fa < fb) {
        hi = b, b = a, fb = fa, a = hi - r * (hi - lo), fa = f(a);
      } else {
        lo = a, a = b, fa = fb, b = lo + r * (hi - lo), fb = f(b);
      }
    }
    return 0.5 * (lo + hi);
  };
  std::array<double, 3> n0 = dir(bt, bp);
  for (double w = 5.0 * deg; w > 1e-6 * deg; w /= 4.0) {
    std::array<double, 3> e1{-n0[2] * n0[0], -n0[2] * n0[1], 1.0 - n0[2] * n0[2]};
    double len = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    if (len < 1e-6) e1 = {1.0, 0.0, 0.0}, len = 1.0;
    for (auto& c : e1) c /= len;
    const std::array<double, 3> e2{n0[1] * e1[2] - n0[2] * e1[1], n0[2] * e1[0] - n0[0] * e1[2],
                                   n0[0] * e1[1] - n0[1] * e1[0]};
    const auto chart = [&](double u, double v) {
      std::array<double, 3> n;
      for (int k = 0; k < 3; ++k) n[k] = std::cos(u) * (std::cos(v) * n0[k] + std::sin(v) * e1[k]) + std::sin(u) * e2[k];
      return n;
    };
    const auto f = [&](double u, double v) { return figure2_block_objective(alpha, chart(u, v)); };
    const auto inner = [&](double v) { return golden(-w, w, [&](double u) { return f(u, v); }); };
    const double v = golden(-w, w, [&](double q) { return f(inner(q), q); });
    const double u = inner(v);
    if (f(u, v) < best) {
      best = f(u, v);
      n0 = chart(u, v);
    }
  }
  return {best, n0};
}

double figure2_analytic_minimum(double alpha) {
  const double t = std::atan2(std::sqrt(std::max(0.0, 1.0 - alpha * alpha)), alpha + 1.0 / std::numbers::sqrt2);
  return 2.0 * std::numbers::sqrt2 * std::sin(t);
}

}  // namespace oracle
